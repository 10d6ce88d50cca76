"""Structure files, the built-in catalog, random instances and exports."""

import json
import random
import re
from pathlib import Path

from . import __version__
from .bits import members, size
from .errors import LatgraphError, ParseError, SizeOutOfRange, UnknownCatalogName
from .order import Poset, build_poset
from .semilattice import build_lattice, build_semilattice

__all__ = [
    "KINDS",
    "CATALOG_NAMES",
    "build_structure",
    "loads_structure",
    "parse_structure",
    "dumps_structure",
    "catalog",
    "random_structure",
    "export_dot",
    "export_report",
]

KINDS = ("poset", "semilattice", "lattice")
CATALOG_NAMES = ("m3", "n5", "fig1", "chain_k", "bool_k", "mk_k")
MAX_RANDOM_SIZE = 16


def build_structure(names, covers, kind):
    p = build_poset(names, covers)
    if kind == "poset":
        return p
    s = build_semilattice(p)
    return build_lattice(s) if kind == "lattice" else s


def _kind_of(obj):
    return obj.kind if hasattr(obj, "kind") else "poset"


def _poset_of(obj):
    return obj if isinstance(obj, Poset) else obj.poset


def loads_structure(text, source="<string>"):
    """Parse the JSON structure format; the order is rebuilt from covers."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", source)
    for key in ("name", "kind", "elements", "covers"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", source)
    kind = doc["kind"]
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {KINDS}, got {kind!r}", f"{source}: field 'kind'")
    elements = doc["elements"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("elements must be a list of strings", f"{source}: field 'elements'")
    known = set(elements)
    covers = doc["covers"]
    if not isinstance(covers, list):
        raise ParseError("covers must be a list of pairs", f"{source}: field 'covers'")
    for k, pair in enumerate(covers):
        where = f"{source}: field 'covers'[{k}]"
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError("cover must be a [lower, upper] pair", where)
        for x in pair:
            if x not in known:
                raise ParseError(f"unknown element {x!r}", where)
    try:
        return build_structure(elements, [tuple(c) for c in covers], kind)
    except LatgraphError as exc:
        if isinstance(exc, ParseError):
            raise
        exc.source = source
        raise


def parse_structure(path):
    path = Path(path)
    return loads_structure(path.read_text(encoding="utf-8"), str(path))


def dumps_structure(obj, name="structure"):
    """Serialise a poset, semilattice or lattice to the JSON file format."""
    p = _poset_of(obj)
    doc = {
        "name": name,
        "kind": _kind_of(obj),
        "elements": [str(x) for x in p.names],
        "covers": [[str(a), str(b)] for a, b in p.cover_names()],
    }
    return json.dumps(doc, indent=2) + "\n"


M3_COVERS = [("0", "u"), ("0", "v"), ("0", "w"), ("u", "1"), ("v", "1"), ("w", "1")]
N5_COVERS = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
FIG1_COVERS = [
    ("0", "u"), ("0", "x"), ("0", "v"),
    ("x", "w"), ("x", "a"), ("v", "a"),
    ("u", "1"), ("a", "1"), ("w", "1"),
]


def _chain(k):
    names = [str(i) for i in range(k)]
    return names, list(zip(names, names[1:]))


def _boolean(k):
    masks = list(range(1 << k))
    name = lambda m: "{" + ",".join(str(i) for i in members(m)) + "}"  # noqa: E731
    covers = [(name(m), name(m | 1 << i)) for m in masks for i in range(k) if not m >> i & 1]
    return [name(m) for m in masks], covers


def _mk(k):
    atoms = [f"a{i}" for i in range(k)]
    return ["0", *atoms, "1"], [("0", a) for a in atoms] + [(a, "1") for a in atoms]


def catalog(name, kind=None):
    """Built-in instance by name: m3, n5, fig1, chain_<k>, bool_<k>, mk_<k>.

    Every catalog entry is a lattice; fig1 defaults to semilattice kind.
    """
    m = re.fullmatch(r"(chain|bool|mk)_(\d+)", name)
    if name == "m3":
        names, covers = ["0", "u", "v", "w", "1"], M3_COVERS
    elif name == "n5":
        names, covers = ["0", "a", "b", "c", "1"], N5_COVERS
    elif name == "fig1":
        names, covers = ["0", "u", "x", "v", "w", "a", "1"], FIG1_COVERS
    elif m and m.group(1) == "chain" and int(m.group(2)) >= 1:
        names, covers = _chain(int(m.group(2)))
    elif m and m.group(1) == "bool" and int(m.group(2)) <= 5:
        names, covers = _boolean(int(m.group(2)))
    elif m and m.group(1) == "mk":
        names, covers = _mk(int(m.group(2)))
    else:
        raise UnknownCatalogName(f"unknown catalog entry {name!r}")
    if kind is None:
        kind = "semilattice" if name == "fig1" else "lattice"
    return build_structure(names, covers, kind)


def _intersection_closed(rng, size_, ground):
    full = (1 << ground) - 1
    while True:
        family = {full}
        attempts = 0
        while len(family) < size_ and attempts < 200:
            attempts += 1
            bottom = full
            for f in family:
                bottom &= f
            if rng.random() < 0.2 and bottom:
                # strictly below the bottom: adds exactly one set
                cand = bottom & ~(1 << rng.choice(list(members(bottom))))
            else:
                cand = rng.getrandbits(ground)
            grown = set(family)
            pending = [cand]
            while pending and len(grown) <= size_:
                c = pending.pop()
                if c in grown:
                    continue
                grown.add(c)
                pending.extend(c & f for f in list(grown))
            if len(grown) <= size_ and not pending:
                family = grown
        if len(family) == size_:
            return sorted(family, key=lambda m: (size(m), m))


def random_structure(seed, size_, kind="lattice"):
    """Deterministic random lattice (kind "lattice") from an
    intersection-closed set family with top, or semilattice from a
    union-closed family containing the empty set."""
    if not 1 <= size_ <= MAX_RANDOM_SIZE:
        raise SizeOutOfRange(f"size must be between 1 and {MAX_RANDOM_SIZE}")
    if kind not in ("lattice", "semilattice"):
        raise ValueError(f"kind must be lattice or semilattice, got {kind!r}")
    rng = random.Random(seed)
    ground = max(2, size_ + 2)
    family = _intersection_closed(rng, size_, ground)
    if kind == "semilattice":
        full = (1 << ground) - 1
        family = sorted((full & ~m for m in family), key=lambda m: (size(m), m))
    names = [f"e{i}" for i in range(len(family))]
    covers = [
        (names[i], names[j])
        for i, x in enumerate(family)
        for j, y in enumerate(family)
        if i != j and x & ~y == 0
    ]
    return build_structure(names, covers, kind)


def _dot_id(name):
    return json.dumps(str(name))


def export_dot(g, name="G"):
    """DOT digraph of a dependency graph, nodes and edges sorted by name."""
    names = g.names
    nodes = sorted(str(names[u]) for u in members(g.vertices))
    edges = sorted((str(names[u]), str(names[v])) for u, v in g.edges())
    lines = [f"digraph {_dot_id(name)} {{"]
    lines += [f"  {_dot_id(x)};" for x in nodes]
    lines += [f"  {_dot_id(a)} -> {_dot_id(b)};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_report(report):
    """Serialise a report dict with sorted keys and the library version."""
    doc = dict(report)
    doc.setdefault("version", __version__)
    return json.dumps(doc, indent=2, sort_keys=True, default=_jsonable) + "\n"


def _jsonable(obj):
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")
