"""Congruences, the quasi-order they induce, and the Galois connection
between congruences and hereditary sets of the dependency graph."""

from dataclasses import dataclass, field

import numpy as np

from .bits import is_subset, members
from .depgraph import all_hereditary, dependency_graph, hereditary_interior, is_hereditary
from .errors import LatgraphError, NotHereditary, check_size
from .order import Poset
from .semilattice import Lattice, build_lattice, build_semilattice, join_irreducibles, partial_meet

__all__ = [
    "Congruence",
    "ConLattice",
    "GaloisReport",
    "is_compatible",
    "principal_congruence",
    "identity_congruence",
    "total_congruence",
    "all_congruences",
    "enumerate_compatible_partitions",
    "leq_theta",
    "j_theta",
    "j_bar_theta",
    "congruence_from_hereditary",
    "galois_F",
    "galois_G",
    "preserves_partial_meets",
    "verify_galois",
]

MAX_LATTICE_CON = 40
MAX_SEMILATTICE_CON = 16
MAX_PARTITION_ORACLE = 10


def _canonical(labels):
    relabel = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def _kind_of(s, kind):
    if kind is None:
        kind = s.kind
    if kind not in ("semilattice", "lattice"):
        raise ValueError(f"unknown congruence kind {kind!r}")
    if kind == "lattice" and not isinstance(s, Lattice):
        raise LatgraphError("lattice congruences need a Lattice")
    return kind


class Congruence:
    """Partition of the carrier stored as a block index per element.

    Blocks are numbered in order of their least member.  ``a <= b`` on
    congruences means refinement (inclusion of the relations).
    """

    def __init__(self, s, blocks, kind):
        self.semilattice = s
        self.blocks = _canonical(blocks)
        self.kind = kind

    def __eq__(self, other):
        return (
            isinstance(other, Congruence)
            and self.kind == other.kind
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.kind, self.blocks))

    def __le__(self, other):
        rep = {}
        for i, b in enumerate(self.blocks):
            j = rep.setdefault(b, i)
            if other.blocks[i] != other.blocks[j]:
                return False
        return True

    def __repr__(self):
        return f"Congruence({self.kind}, {self.block_names()})"

    def same(self, a, b):
        return self.blocks[a] == self.blocks[b]

    @property
    def num_blocks(self):
        return max(self.blocks, default=-1) + 1

    def block_masks(self):
        out = [0] * self.num_blocks
        for i, b in enumerate(self.blocks):
            out[b] |= 1 << i
        return out

    def block_names(self):
        return [self.semilattice.labels(m) for m in self.block_masks()]

    def nontrivial_blocks(self):
        return [m for m in self.block_masks() if m & (m - 1)]

    def is_identity(self):
        return self.num_blocks == len(self.blocks)

    def is_total(self):
        return self.num_blocks <= 1

    def relation(self):
        b = np.array(self.blocks)
        return b[:, None] == b[None, :]

    def meet(self, other):
        return Congruence(self.semilattice, list(zip(self.blocks, other.blocks)), self.kind)

    def join(self, other):
        # transitive closure of the union of two congruences is a congruence
        uf = _UnionFind(len(self.blocks))
        for t in (self, other):
            for i, b in enumerate(t.blocks):
                uf.union(i, t.blocks.index(b))
        return Congruence(self.semilattice, uf.labels(), self.kind)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def labels(self):
        return [self.find(i) for i in range(len(self.parent))]


def _close(s, uf, kind):
    ops = [s.join] + ([s.meet] if kind == "lattice" else [])
    n = len(s)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            r = uf.find(x)
            if r == x:
                continue
            for op in ops:
                for c in range(n):
                    if uf.union(int(op[x, c]), int(op[r, c])):
                        changed = True
    return uf


def is_compatible(s, blocks, kind=None):
    """Whether the partition ``blocks`` respects join (and meet for lattices)."""
    kind = _kind_of(s, kind)
    b = np.asarray(blocks)
    same = b[:, None] == b[None, :]
    for op in [s.join] + ([s.meet] if kind == "lattice" else []):
        img = b[op]
        # same[x, y] must imply img[x, c] == img[y, c] for every c
        agree = img[:, None, :] == img[None, :, :]
        if not agree.all(axis=2)[same].all():
            return False
    return True


def identity_congruence(s, kind=None):
    return Congruence(s, range(len(s)), _kind_of(s, kind))


def total_congruence(s, kind=None):
    return Congruence(s, [0] * len(s), _kind_of(s, kind))


def principal_congruence(s, a, b, kind=None):
    """Least congruence of the given kind identifying ``a`` and ``b``."""
    kind = _kind_of(s, kind)
    uf = _UnionFind(len(s))
    uf.union(a, b)
    return Congruence(s, _close(s, uf, kind).labels(), kind)


class ConLattice:
    """All congruences of one kind, identity first, ordered by refinement."""

    def __init__(self, s, kind, congruences):
        self.semilattice = s
        self.kind = kind
        self.congruences = tuple(
            sorted(congruences, key=lambda t: (-t.num_blocks, t.blocks))
        )
        self._index = {t: i for i, t in enumerate(self.congruences)}
        rel = np.array([t.relation().ravel() for t in self.congruences])
        self.leq = _subset_matrix(rel, rel)

    def __len__(self):
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def __contains__(self, t):
        return t in self._index

    def index(self, t):
        return self._index[t]

    def as_poset(self):
        names = [f"con{i}" for i in range(len(self))]
        return Poset(names, self.leq)

    def as_lattice(self):
        return build_lattice(build_semilattice(self.as_poset()))


def _subset_matrix(a, b):
    """out[i, j] is True iff row a[i] is contained in row b[j]."""
    a = np.asarray(a, dtype=np.int64)
    nb = 1 - np.asarray(b, dtype=np.int64)
    return (a @ nb.T) == 0


def all_congruences(s, kind=None):
    """Every congruence, generated as joins of principal congruences."""
    kind = _kind_of(s, kind)
    limit = MAX_LATTICE_CON if kind == "lattice" else MAX_SEMILATTICE_CON
    check_size(len(s), limit, "carrier")
    # comparable pairs suffice: a ~ b iff a ~ a v b ~ b
    principals = {
        principal_congruence(s, a, b, kind)
        for a in range(len(s))
        for b in members(s.up[a])
        if a != b
    }
    found = {identity_congruence(s, kind)} | principals
    frontier = list(found)
    while frontier:
        nxt = []
        for t in frontier:
            for p in principals:
                j = t.join(p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return ConLattice(s, kind, found)


def enumerate_compatible_partitions(s, kind=None):
    """Brute-force oracle: every set partition of the carrier that is
    compatible with the operations.  Bell-number cost."""
    kind = _kind_of(s, kind)
    check_size(len(s), MAX_PARTITION_ORACLE, "carrier")
    n = len(s)
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            if is_compatible(s, prefix, kind):
                out.append(Congruence(s, prefix, kind))
            return
        for b in range(top + 2):
            grow(prefix + [b], max(top, b))

    if n == 0:
        return [Congruence(s, [], kind)]
    grow([0], 0)
    return out


def leq_theta(s, t, a, b):
    """a <=_T b iff a v b is T-equivalent to b."""
    return t.same(int(s.join[a, b]), b)


def j_theta(s, t):
    """Join-irreducibles not T-equivalent to any strictly smaller element."""
    out = 0
    for u in members(join_irreducibles(s)):
        if not any(t.same(x, u) for x in members(s.down[u]) if x != u):
            out |= 1 << u
    return out


def j_bar_theta(s, t):
    """Join-irreducibles u with u <=_T x implying u <= x for every x."""
    out = 0
    for u in members(join_irreducibles(s)):
        if all(s.leq[u, x] for x in range(len(s)) if leq_theta(s, t, u, x)):
            out |= 1 << u
    return out


def congruence_from_hereditary(s, h, kind=None, graph=None):
    """a ~ b iff the down-sets of a and b meet ``h`` in the same set."""
    kind = _kind_of(s, kind)
    if graph is None:
        graph = dependency_graph(s)
    if not is_hereditary(graph, h):
        raise NotHereditary(f"{s.labels(h)} is not hereditary")
    return Congruence(s, [d & h for d in s.down], kind)


def galois_F(s, t, graph=None):
    """Image of a congruence: J_T for lattice congruences, otherwise the
    hereditary interior of the bar set."""
    if t.kind == "lattice":
        return j_theta(s, t)
    if graph is None:
        graph = dependency_graph(s)
    return hereditary_interior(graph, j_bar_theta(s, t))


def galois_G(s, h, kind=None, graph=None):
    return congruence_from_hereditary(s, h, kind, graph)


def preserves_partial_meets(s, t):
    """Every existing meet is respected: a ~ b implies a ^ c ~ b ^ c."""
    n = len(s)
    p = s.poset
    meet = [[partial_meet(p, a, c) for c in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if not t.same(a, b):
                continue
            for c in range(n):
                ma, mb = meet[a][c], meet[b][c]
                if ma is not None and mb is not None and not t.same(ma, mb):
                    return False
    return True


@dataclass
class GaloisReport:
    """Outcome of a verification run: law name to verdict, plus
    counterexample records for every violated law."""

    kind: str
    counts: dict = field(default_factory=dict)
    laws: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples

    def record(self, law, holds, **witness):
        self.laws[law] = self.laws.get(law, True) and bool(holds)
        if not holds:
            self.counterexamples.append({"law": law, **witness})

    def as_dict(self):
        return {
            "kind": self.kind,
            "counts": dict(self.counts),
            "laws": dict(self.laws),
            "info": dict(self.info),
            "counterexamples": list(self.counterexamples),
            "ok": self.ok,
        }


def _bits_matrix(masks, universe):
    idx = list(members(universe))
    return np.array([[m >> i & 1 for i in idx] for m in masks], dtype=bool).reshape(
        len(masks), len(idx)
    )


def _first(matrix):
    i, j = np.argwhere(matrix)[0]
    return int(i), int(j)


def verify_galois(s, kind=None, cons=None, herd=None, graph=None):
    """Check the Galois-connection laws for every congruence and every
    hereditary set, reporting counterexamples instead of raising."""
    from .topology import closed_hereditary

    kind = _kind_of(s, kind)
    if graph is None:
        graph = dependency_graph(s)
    if cons is None:
        cons = all_congruences(s, kind)
    if herd is None:
        herd = all_hereditary(graph)
    verts = graph.vertices
    report = GaloisReport(kind)
    report.counts = {"congruences": len(cons), "hereditary": len(herd)}

    def con_names(t):
        return t.block_names()

    f_img = [galois_F(s, t, graph) for t in cons]
    g_img = [galois_G(s, h, kind, graph) for h in herd]

    for t, fh in zip(cons, f_img):
        report.record("F_is_hereditary", is_hereditary(graph, fh), congruence=con_names(t))
    for h, gh in zip(herd, g_img):
        report.record(
            "G_is_congruence",
            is_compatible(s, gh.blocks, kind),
            hereditary=s.labels(h),
        )
        report.record(
            "G_preserves_meets", preserves_partial_meets(s, gh), hereditary=s.labels(h)
        )

    con_rel = np.array([t.relation().ravel() for t in cons])
    g_rel = np.array([t.relation().ravel() for t in g_img]).reshape(len(herd), -1)
    f_bits = _bits_matrix(f_img, verts)
    h_bits = _bits_matrix(herd, verts)

    con_le = cons.leq
    herd_le = _subset_matrix(h_bits, h_bits)
    # Theta <= Theta' must give F(Theta') <= F(Theta)
    bad = con_le & ~_subset_matrix(f_bits, f_bits).T
    report.record("F_antitone", not bad.any(), **_pair(bad, cons, con_names, cons, con_names))
    g_le = _subset_matrix(g_rel, g_rel)
    bad = herd_le & ~g_le.T
    report.record(
        "G_antitone", not bad.any(), **_pair(bad, herd, s.labels, herd, s.labels)
    )

    left = _subset_matrix(con_rel, g_rel)  # Theta <= G(H)
    right = _subset_matrix(h_bits, f_bits).T  # H <= F(Theta)
    bad = left != right
    report.record(
        "adjunction", not bad.any(), **_pair(bad, cons, con_names, herd, s.labels)
    )

    gf = [galois_G(s, fh, kind, graph) for fh in f_img]
    for t, back in zip(cons, gf):
        report.record("unit_congruence", t <= back, congruence=con_names(t))
    fg = [galois_F(s, gh, graph) for gh in g_img]
    for h, back in zip(herd, fg):
        report.record("unit_hereditary", is_subset(h, back), hereditary=s.labels(h))

    gf_identity = all(t == back for t, back in zip(cons, gf))
    report.info["GF_is_identity"] = gf_identity
    if kind == "lattice":
        report.record("GF_identity", gf_identity)
        closed = closed_hereditary(s, graph, herd)
        report.counts["closed_hereditary"] = len(closed)
        position = {h: i for i, h in enumerate(herd)}
        for h in closed:
            back = fg[position[h]]
            report.record("FG_identity_on_closed", back == h, hereditary=s.labels(h))
    return report


def _pair(bad, rows, row_name, cols, col_name):
    if not bad.any():
        return {}
    i, j = _first(bad)
    return {"left": row_name(list(rows)[i]), "right": col_name(list(cols)[j])}
