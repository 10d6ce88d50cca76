"""Dependency graph of the join-irreducibles and its hereditary subsets."""

import numpy as np

from .bits import is_subset, members, size
from .errors import check_size
from .order import QuasiOrder, ideal_masks, max_antisym_quotient
from .semilattice import join_irreducibles, minimal_join_covers

__all__ = [
    "DepGraph",
    "dependency_graph",
    "edges_via_min_covers",
    "is_hereditary",
    "hereditary_interior",
    "reachability",
    "all_hereditary",
    "reachability_quotient",
    "check_reachability_correspondence",
]

MAX_HEREDITARY_VERTICES = 20


class DepGraph:
    """Directed graph on J(S), loops included.

    ``succ[u]`` is the bitmask of edge targets of vertex ``u`` (indices are
    carrier indices of the semilattice; non-vertices have no successors).
    """

    def __init__(self, s, vertices, succ):
        self.semilattice = s
        self.vertices = vertices
        self.succ = tuple(succ)

    def __eq__(self, other):
        return (
            isinstance(other, DepGraph)
            and self.vertices == other.vertices
            and self.succ == other.succ
        )

    def __hash__(self):
        return hash((self.vertices, self.succ))

    def __repr__(self):
        return f"DepGraph({size(self.vertices)} vertices, {len(self.edges())} edges)"

    @property
    def names(self):
        return self.semilattice.names

    def edges(self):
        return [(u, v) for u in members(self.vertices) for v in members(self.succ[u])]

    def edge_names(self):
        return [(self.names[u], self.names[v]) for u, v in self.edges()]

    def has_edge(self, u, v):
        return bool(self.succ[u] >> v & 1)

    def is_symmetric(self):
        return all(self.has_edge(v, u) for u, v in self.edges())

    def loops_only(self):
        return all(u == v for u, v in self.edges())


def dependency_graph(s):
    """u -> v iff some x has u <= x v v while u <= x v y fails for all y < v."""
    leq, join = s.leq, s.join
    verts = join_irreducibles(s)
    succ = [0] * len(s)
    for v in members(verts):
        below_v = [y for y in members(s.down[v]) if y != v]
        for u in members(verts):
            # reached[x]: u <= x v y for some y < v
            reached = np.zeros(len(s), dtype=bool)
            for y in below_v:
                reached |= leq[u, join[:, y]]
            if (leq[u, join[:, v]] & ~reached).any():
                succ[u] |= 1 << v
    return DepGraph(s, verts, succ)


def edges_via_min_covers(s):
    """u -> v iff v lies in some minimal join-cover of u."""
    verts = join_irreducibles(s)
    succ = [0] * len(s)
    for u in members(verts):
        for m in minimal_join_covers(s, u):
            succ[u] |= m
    return DepGraph(s, verts, succ)


def is_hereditary(g, h):
    if not is_subset(h, g.vertices):
        return False
    return all(is_subset(g.succ[u], h) for u in members(h))


def hereditary_interior(g, x):
    """Largest hereditary subset of ``x`` (greatest fixpoint)."""
    x &= g.vertices
    changed = True
    while changed:
        changed = False
        for u in members(x):
            if not is_subset(g.succ[u], x):
                x &= ~(1 << u)
                changed = True
    return x


def _reach(g):
    reach = {}
    for u in members(g.vertices):
        seen = 1 << u
        stack = [u]
        while stack:
            w = stack.pop()
            for v in members(g.succ[w] & ~seen):
                seen |= 1 << v
                stack.append(v)
        reach[u] = seen
    return reach


def reachability(g):
    """Reachability quasi-order on the vertices, in vertex index order."""
    verts = list(members(g.vertices))
    reach = _reach(g)
    rel = np.array([[reach[u] >> v & 1 for v in verts] for u in verts], dtype=bool)
    return QuasiOrder([g.names[u] for u in verts], rel.reshape(len(verts), len(verts)))


def all_hereditary(g):
    """Every hereditary vertex set, ascending by bitmask."""
    check_size(size(g.vertices), MAX_HEREDITARY_VERTICES, "graph")
    reach = _reach(g)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for u in members(g.vertices & ~h):
                bigger = h | reach[u]
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen)


def reachability_quotient(g):
    """Maximal antisymmetric quotient of reachability.

    Returns the quotient poset (u below v when u reaches v) and a dict from
    vertex carrier index to block index.
    """
    verts = list(members(g.vertices))
    quotient, blocks = max_antisym_quotient(reachability(g))
    return quotient, {u: blocks[k] for k, u in enumerate(verts)}


def check_reachability_correspondence(g):
    """Check that complements of hereditary sets are exactly the order
    ideals of the reachability quotient, with inclusion reversed.

    Returns a list of counterexample descriptions (empty when it holds).
    """
    quotient, block_map = reachability_quotient(g)
    herd = all_hereditary(g)
    ideals = set(ideal_masks(quotient))
    problems = []
    if len(herd) != len(ideals):
        problems.append(f"{len(herd)} hereditary sets but {len(ideals)} ideals")
    image = {}
    for h in herd:
        img = 0
        for u in members(g.vertices & ~h):
            img |= 1 << block_map[u]
        if img not in ideals:
            problems.append(f"complement of {g.semilattice.labels(h)} is not an ideal")
        image[h] = img
    if len(set(image.values())) != len(herd):
        problems.append("complement map is not injective")
    for h1 in herd:
        for h2 in herd:
            if is_subset(h1, h2) != is_subset(image[h2], image[h1]):
                problems.append("complement map does not reverse inclusion")
                return problems
    return problems
