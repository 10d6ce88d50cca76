"""Finite posets, quasi-orders and join-refinement of finite subsets.

Subsets of a carrier are plain ``int`` bitmasks over the dense element
indices ``0..n-1``; a family of subsets is any iterable of such masks.
"""

import numpy as np

from .bits import is_subset, members, to_mask
from .errors import (
    CycleDetected,
    DuplicateName,
    EmptyFamily,
    LatgraphError,
    NotSaturated,
    UnknownName,
    check_size,
)

__all__ = [
    "Poset",
    "QuasiOrder",
    "build_poset",
    "down_set",
    "up_set",
    "is_antichain",
    "join_refines",
    "canonical_antichain",
    "antichains",
    "is_saturated",
    "is_c_minimal",
    "find_c_minimal",
    "ideal_masks",
    "order_ideals",
    "max_antisym_quotient",
    "transitive_closure",
]

MAX_IDEAL_CARRIER = 20


def transitive_closure(rel):
    """Reflexive-transitive closure of a square boolean matrix (Warshall)."""
    r = np.array(rel, dtype=bool, copy=True)
    n = r.shape[0]
    r[np.arange(n), np.arange(n)] = True
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return r


def _masks_from_columns(m):
    return tuple(to_mask(np.flatnonzero(m[:, j])) for j in range(m.shape[1]))


class Poset:
    """Immutable finite partial order on dense indices with display names.

    ``leq[i, j]`` is True iff element ``i`` is below element ``j``.  The
    down-set and up-set of each element are cached as bitmasks.
    """

    def __init__(self, names, leq, _checked=False):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise DuplicateName("element names must be distinct")
        leq = np.array(leq, dtype=bool, copy=True).reshape(len(names), len(names))
        if not _checked:
            n = len(names)
            if n and not leq[np.arange(n), np.arange(n)].all():
                raise LatgraphError("order is not reflexive")
            off = leq & leq.T & ~np.eye(n, dtype=bool)
            if off.any():
                i, j = np.argwhere(off)[0]
                raise CycleDetected(f"{names[i]!r} and {names[j]!r} lie on a cycle")
            if (transitive_closure(leq) != leq).any():
                raise LatgraphError("order is not transitive")
        leq.setflags(write=False)
        self.names = names
        self.leq = leq
        self._index = {name: i for i, name in enumerate(names)}
        self.down = _masks_from_columns(leq)
        self.up = _masks_from_columns(leq.T)
        lt = leq & ~np.eye(len(names), dtype=bool)
        cov = lt & ~((lt.astype(np.int64) @ lt.astype(np.int64)) > 0)
        self.lower_covers = _masks_from_columns(cov)
        self.upper_covers = _masks_from_columns(cov.T)
        self.covers = tuple((int(a), int(b)) for a, b in np.argwhere(cov))

    @classmethod
    def from_leq(cls, names, leq):
        return cls(names, leq)

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.names == other.names
            and bool((self.leq == other.leq).all())
        )

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    @property
    def full(self):
        return (1 << len(self.names)) - 1

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownName(f"unknown element {name!r}") from None

    def mask(self, names):
        """Bitmask of an iterable of element names."""
        return to_mask(self.index(x) for x in names)

    def labels(self, mask):
        """Element names of ``mask`` in index order."""
        return [self.names[i] for i in members(mask)]

    def le(self, a, b):
        return bool(self.leq[a, b])

    def lt(self, a, b):
        return a != b and bool(self.leq[a, b])

    def cover_names(self):
        return [(self.names[a], self.names[b]) for a, b in self.covers]


class QuasiOrder:
    """Reflexive and transitive relation; antisymmetry is not required."""

    def __init__(self, names, rel):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise DuplicateName("element names must be distinct")
        rel = np.array(rel, dtype=bool, copy=True).reshape(len(names), len(names))
        n = len(names)
        if n and not rel[np.arange(n), np.arange(n)].all():
            raise LatgraphError("quasi-order is not reflexive")
        if (transitive_closure(rel) != rel).any():
            raise LatgraphError("quasi-order is not transitive")
        rel.setflags(write=False)
        self.names = names
        self.rel = rel

    def __len__(self):
        return len(self.names)


def build_poset(names, covers):
    """Poset generated by ``covers``, a list of ``(lower, upper)`` name pairs.

    Transitively implied pairs are accepted and dropped from the canonical
    cover list.
    """
    names = list(names)
    if len(set(names)) != len(names):
        seen = set()
        dup = next(x for x in names if x in seen or seen.add(x))
        raise DuplicateName(f"duplicate element {dup!r}")
    index = {name: i for i, name in enumerate(names)}
    rel = np.zeros((len(names), len(names)), dtype=bool)
    for lo, hi in covers:
        for x in (lo, hi):
            if x not in index:
                raise UnknownName(f"unknown element {x!r}")
        if lo == hi:
            raise CycleDetected(f"{lo!r} cannot be covered by itself")
        rel[index[lo], index[hi]] = True
    leq = transitive_closure(rel)
    off = leq & leq.T & ~np.eye(len(names), dtype=bool)
    if off.any():
        i, j = np.argwhere(off)[0]
        raise CycleDetected(f"{names[i]!r} and {names[j]!r} lie on a cycle")
    return Poset(names, leq, _checked=True)


def down_set(p, x):
    """Elements below some member of ``x``."""
    out = 0
    for i in members(x):
        out |= p.down[i]
    return out


def up_set(p, x):
    out = 0
    for i in members(x):
        out |= p.up[i]
    return out


def is_antichain(p, a):
    for i in members(a):
        if (p.down[i] | p.up[i]) & a & ~(1 << i):
            return False
    return True


def join_refines(p, x, y):
    """True iff every member of ``x`` lies below some member of ``y``."""
    return is_subset(x, down_set(p, y))


def canonical_antichain(p, x):
    """Maximal elements of ``x``: the unique antichain equivalent to ``x``."""
    out = 0
    for i in members(x):
        if not (p.up[i] & x & ~(1 << i)):
            out |= 1 << i
    return out


def antichains(p, within=None):
    """All antichains contained in ``within`` (default: the whole carrier),
    in increasing bitmask order.  The empty antichain is included."""
    if within is None:
        within = p.full
    elems = list(members(within))
    comparable = [p.down[i] | p.up[i] for i in range(len(p))]
    out = []

    def extend(k, chosen, blocked):
        out.append(chosen)
        for t in range(k, len(elems)):
            i = elems[t]
            if not blocked >> i & 1:
                extend(t + 1, chosen | 1 << i, blocked | comparable[i])

    extend(0, 0, 0)
    out.sort()
    return out


def _family(c):
    c = list(c)
    if len(set(c)) != len(c):
        raise LatgraphError("family of subsets contains duplicates")
    return c


def is_saturated(p, c):
    """Every non-empty member of ``c`` contains an antichain member of ``c``."""
    c = _family(c)
    chains = [a for a in c if is_antichain(p, a)]
    return all(x == 0 or any(is_subset(a, x) for a in chains) for x in c)


def is_c_minimal(p, c, x):
    """``x`` is contained in every member of ``c`` that join-refines it."""
    dx = down_set(p, x)
    return all(is_subset(x, y) for y in c if is_subset(y, dx))


def find_c_minimal(p, c):
    """Least-bitmask C-minimal member of a non-empty saturated family."""
    c = _family(c)
    if not c:
        raise EmptyFamily("family is empty")
    if not is_saturated(p, c):
        raise NotSaturated("family is not saturated")
    for x in sorted(c):
        if is_c_minimal(p, c, x):
            return x
    # Unreachable on finite posets: every finite poset has DCC.
    raise AssertionError("saturated family without a C-minimal member")


def ideal_masks(p):
    """Bitmasks of all order ideals (down-closed subsets), ascending."""
    check_size(len(p), MAX_IDEAL_CARRIER, "poset")
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ideal in frontier:
            for i in members(p.full & ~ideal):
                bigger = ideal | p.down[i]
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(seen)


def order_ideals(p):
    """Inclusion-ordered poset of all order ideals, named by bitmask."""
    masks = ideal_masks(p)
    leq = np.array([[x & ~y == 0 for y in masks] for x in masks], dtype=bool)
    return Poset([str(m) for m in masks], leq, _checked=True)


def max_antisym_quotient(q):
    """Poset of blocks of mutual comparability and the element-to-block map.

    Blocks are numbered by their least member.  A singleton block keeps its
    member's name; larger blocks are named by the tuple of member names.
    """
    rel = q.rel
    n = len(q)
    block_map = [-1] * n
    reps = []
    for i in range(n):
        if block_map[i] >= 0:
            continue
        b = len(reps)
        reps.append(i)
        for j in range(i, n):
            if rel[i, j] and rel[j, i]:
                block_map[j] = b
    names = []
    for b, r in enumerate(reps):
        block = [q.names[i] for i in range(n) if block_map[i] == b]
        names.append(block[0] if len(block) == 1 else tuple(block))
    leq = rel[np.ix_(reps, reps)]
    return Poset(names, leq, _checked=True), tuple(block_map)
