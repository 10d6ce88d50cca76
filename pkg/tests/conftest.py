import sys

import pytest

import latgraph as lg

CATALOG_LATTICES = (
    ["m3", "n5", "fig1"]
    + [f"chain_{k}" for k in range(1, 7)]
    + [f"bool_{k}" for k in range(1, 4)]
    + ["mk_3", "mk_4"]
)


def random_pool(count, max_size=12, start=0):
    """Seeded (seed, size, kind) triples with sizes 2..max_size."""
    return [
        (seed, 2 + seed % (max_size - 1), "lattice" if seed % 2 else "semilattice")
        for seed in range(start, start + count)
    ]


def catalog_lattice(name):
    return lg.catalog(name, kind="lattice")


def catalog_semilattice(name):
    return lg.catalog(name, kind="semilattice")


def named(s, *names):
    return s.mask(names)


@pytest.fixture
def m3():
    return lg.catalog("m3")


@pytest.fixture
def n5():
    return lg.catalog("n5")


@pytest.fixture
def fig1():
    return lg.catalog("fig1")


@pytest.fixture
def chain3():
    return lg.build_poset(["0", "a", "1"], [("0", "a"), ("a", "1")])


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.format_line(number))
