import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import latgraph as lg
from latgraph.bits import members

from conftest import CATALOG_LATTICES, random_pool
from oracles import down_closed_subsets, hereditary_by_subsets


def edges(s, g):
    return set(g.edge_names())


def test_m3_graph_is_complete(m3):
    g = lg.dependency_graph(m3)
    assert g.vertices == lg.join_irreducibles(m3)
    assert edges(m3, g) == {(a, b) for a in "uvw" for b in "uvw"}
    assert g.is_symmetric()


def test_fig1_example_edges(fig1):
    g = lg.dependency_graph(fig1)
    assert g.has_edge(fig1.index("u"), fig1.index("w"))
    assert g.has_edge(fig1.index("v"), fig1.index("u"))
    for v in members(g.vertices):
        assert g.has_edge(v, v)


def test_chain_graph_loops_only():
    s = lg.catalog("chain_5")
    g = lg.dependency_graph(s)
    assert g.loops_only() and len(g.edges()) == 4


def test_oracle_graphs(m3, n5):
    assert lg.edges_via_min_covers(m3) == lg.dependency_graph(m3)
    g = lg.edges_via_min_covers(n5)
    assert edges(n5, g) == {("a", "a"), ("b", "b"), ("c", "c"), ("b", "a"), ("b", "c")}
    b2 = lg.catalog("bool_2")
    assert lg.edges_via_min_covers(b2).loops_only()


@pytest.mark.parametrize("name", CATALOG_LATTICES)
def test_edge_oracle_on_catalog(name):
    s = lg.catalog(name)
    assert lg.dependency_graph(s) == lg.edges_via_min_covers(s)


def test_hereditary_interior_examples(m3, n5):
    g = lg.dependency_graph(m3)
    assert lg.hereditary_interior(g, m3.mask("uv")) == 0
    assert lg.hereditary_interior(g, g.vertices) == g.vertices
    gn = lg.dependency_graph(n5)
    assert lg.hereditary_interior(gn, n5.mask("ba")) == n5.mask("a")


def test_all_hereditary_examples(m3, n5):
    assert lg.all_hereditary(lg.dependency_graph(m3)) == [0, m3.mask("uvw")]
    b3 = lg.catalog("bool_3")
    assert len(lg.all_hereditary(lg.dependency_graph(b3))) == 8
    herd = lg.all_hereditary(lg.dependency_graph(n5))
    expected = [0, n5.mask("a"), n5.mask("c"), n5.mask("ac"), n5.mask("abc")]
    assert herd == sorted(expected)


def test_all_hereditary_guard(monkeypatch):
    monkeypatch.setenv("LATGRAPH_MAX_ELEMS", "2")
    with pytest.raises(lg.CarrierTooLarge):
        lg.all_hereditary(lg.dependency_graph(lg.catalog("m3")))


@pytest.mark.parametrize("seed,size,kind", random_pool(25))
def test_hereditary_enumeration_matches_bruteforce(seed, size, kind):
    s = lg.random_structure(seed, size, kind)
    g = lg.dependency_graph(s)
    herd = lg.all_hereditary(g)
    assert herd == hereditary_by_subsets(g)
    herd_set = set(herd)
    assert 0 in herd_set and g.vertices in herd_set
    for h1 in herd:
        for h2 in herd:
            assert h1 | h2 in herd_set and h1 & h2 in herd_set


def test_reachability_quotient(m3, n5):
    q, blocks = lg.reachability_quotient(lg.dependency_graph(m3))
    assert len(q) == 1 and set(blocks.values()) == {0}
    assert len(lg.ideal_masks(q)) == 2

    b3 = lg.catalog("bool_3")
    q, _ = lg.reachability_quotient(lg.dependency_graph(b3))
    assert len(q) == 3 and not q.covers and len(lg.ideal_masks(q)) == 8

    q, blocks = lg.reachability_quotient(lg.dependency_graph(n5))
    a, b, c = (blocks[n5.index(x)] for x in "abc")
    assert len(q) == 3
    assert q.le(b, a) and q.le(b, c)
    assert not q.le(a, c) and not q.le(c, a)
    assert len(lg.ideal_masks(q)) == 5


@pytest.mark.parametrize("name", CATALOG_LATTICES)
def test_reachability_correspondence_catalog(name):
    g = lg.dependency_graph(lg.catalog(name))
    assert lg.check_reachability_correspondence(g) == []


@pytest.mark.parametrize("seed,size,kind", random_pool(25, start=300))
def test_reachability_correspondence_random(seed, size, kind):
    g = lg.dependency_graph(lg.random_structure(seed, size, kind))
    assert lg.check_reachability_correspondence(g) == []
    q, _ = lg.reachability_quotient(g)
    assert lg.ideal_masks(q) == down_closed_subsets(q)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 10), st.data())
def test_interior_is_monotone_idempotent_deflationary(seed, size, data):
    s = lg.random_structure(seed, size, "semilattice")
    g = lg.dependency_graph(s)
    verts = list(members(g.vertices))
    y = sum(1 << v for v in data.draw(st.lists(st.sampled_from(verts), unique=True)))
    x = y & sum(1 << v for v in data.draw(st.lists(st.sampled_from(verts), unique=True)))
    hx, hy = lg.hereditary_interior(g, x), lg.hereditary_interior(g, y)
    assert hx & ~x == 0
    assert lg.is_hereditary(g, hx)
    assert lg.hereditary_interior(g, hx) == hx
    assert hx & ~hy == 0
    # largest hereditary subset
    for h in lg.all_hereditary(g):
        if h & ~x == 0:
            assert h & ~hx == 0
