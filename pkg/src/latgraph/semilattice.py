"""Finite <0,v>-semilattices and lattices, and their structural predicates."""

import warnings

import numpy as np

from .bits import is_subset, members, size
from .errors import LatgraphError, NoCover, NoJoin, NoMeet, NoZero, check_size
from .order import Poset, antichains, canonical_antichain, down_set

__all__ = [
    "JoinSemilattice",
    "Lattice",
    "build_semilattice",
    "build_lattice",
    "meet_table",
    "partial_meet",
    "join_irreducibles",
    "join_primes",
    "atoms",
    "is_atomistic",
    "is_particle",
    "minimal_i_covers",
    "minimal_join_covers",
    "wmjcrp_check",
    "has_wmjcrp",
    "is_distributive",
    "is_modular",
    "is_relatively_complemented",
]

MAX_COVER_INDEX = 20
MAX_WMJCRP_CARRIER = 12


class JoinSemilattice:
    """A validated finite join-semilattice with zero.

    The join table is always recomputed from the order; ``join[a, b]`` is
    the index of the least upper bound of ``a`` and ``b``.
    """

    kind = "semilattice"

    def __init__(self, poset, zero, join):
        self.poset = poset
        self.zero = zero
        join = np.asarray(join, dtype=np.int64)
        join.setflags(write=False)
        self.join = join

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return f"{type(self).__name__}({len(self)} elements)"

    @property
    def names(self):
        return self.poset.names

    @property
    def leq(self):
        return self.poset.leq

    @property
    def down(self):
        return self.poset.down

    @property
    def up(self):
        return self.poset.up

    @property
    def full(self):
        return self.poset.full

    def index(self, name):
        return self.poset.index(name)

    def mask(self, names):
        return self.poset.mask(names)

    def labels(self, mask):
        return self.poset.labels(mask)

    def join_of(self, mask):
        """Join of the elements in ``mask``; the empty join is zero."""
        out = self.zero
        for i in members(mask):
            out = self.join[out, i]
        return int(out)


class Lattice(JoinSemilattice):
    kind = "lattice"

    def __init__(self, poset, zero, join, meet):
        super().__init__(poset, zero, join)
        meet = np.asarray(meet, dtype=np.int64)
        meet.setflags(write=False)
        self.meet = meet


def _bound_table(p, bounds, dual, error):
    # the least element of a bound set U is the l in U with U inside dual[l]
    n = len(p)
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            common = bounds[a] & bounds[b]
            best = [c for c in members(common) if is_subset(common, dual[c])]
            if not best:
                raise error(p.names[a], p.names[b])
            table[a, b] = table[b, a] = best[0]
    return table


def build_semilattice(p):
    """Validate that ``p`` has a zero and all pairwise joins."""
    n = len(p)
    zeros = [i for i in range(n) if p.up[i] == p.full]
    if not zeros:
        raise NoZero("poset has no least element")
    join = _bound_table(p, p.up, p.up, NoJoin)
    return JoinSemilattice(p, zeros[0], join)


def meet_table(p):
    """Greatest lower bounds of all pairs of ``p``; raises NoMeet."""
    return _bound_table(p, p.down, p.down, NoMeet)


def build_lattice(s):
    if isinstance(s, Poset):
        s = build_semilattice(s)
    return Lattice(s.poset, s.zero, s.join, meet_table(s.poset))


def partial_meet(p, a, b):
    """Index of the greatest common lower bound of ``a`` and ``b`` or None."""
    common = p.down[a] & p.down[b]
    for c in members(common):
        if is_subset(common, p.down[c]):
            return c
    return None


def join_irreducibles(s):
    """Non-zero elements with exactly one lower cover."""
    lc = s.poset.lower_covers
    out = 0
    for i in range(len(s)):
        if i != s.zero and size(lc[i]) == 1:
            out |= 1 << i
    return out


def join_primes(s):
    # A join-irreducible u that is prime for every pair is prime for every
    # finite F: induct on |F| using u <= x v (join of the rest).
    leq, join = s.leq, s.join
    out = 0
    for u in members(join_irreducibles(s)):
        below = leq[u, join]
        escape = below & ~leq[u][:, None] & ~leq[u][None, :]
        if not escape.any():
            out |= 1 << u
    return out


def atoms(s):
    return s.poset.upper_covers[s.zero]


def _generated_by(s, gens):
    return all(s.join_of(gens & s.down[a]) == a for a in range(len(s)))


def is_atomistic(s):
    return _generated_by(s, atoms(s))


def is_particle(s):
    """Join-irreducibles join-generate ``s``; DCC holds since ``s`` is finite."""
    return _generated_by(s, join_irreducibles(s))


def minimal_i_covers(s, a, index_set):
    """All minimal I-covers of ``a`` for I = ``index_set``, ascending.

    Only antichain covers are candidates, and minimality is tested against
    antichain covers only: if Y is a cover with Y << F, its maximal elements
    form a cover A with A << F and A inside Y.
    """
    check_size(size(index_set), MAX_COVER_INDEX, "cover index set")
    if not s.leq[a, s.join_of(index_set)]:
        raise NoCover(f"{s.names[a]!r} has no cover inside the index set")
    covers = [f for f in antichains(s.poset, index_set) if s.leq[a, s.join_of(f)]]
    out = []
    for f in covers:
        df = down_set(s.poset, f)
        if all(is_subset(f, y) for y in covers if is_subset(y, df)):
            out.append(f)
    return out


def minimal_join_covers(s, a):
    """Minimal join-covers of ``a``; these are the minimal J(S)-covers."""
    return minimal_i_covers(s, a, join_irreducibles(s))


def wmjcrp_check(s):
    """Return ``(value, constructive)`` for the weak refinement property.

    On carriers up to the guard every antichain join-cover of every element
    is refined to a minimal join-cover.  Larger carriers get the value
    implied by particle-ness and ``constructive`` is False.
    """
    try:
        check_size(len(s), MAX_WMJCRP_CARRIER, "semilattice")
    except LatgraphError:
        warnings.warn("carrier too large for the constructive check", stacklevel=2)
        return is_particle(s), False
    p = s.poset
    all_chains = antichains(p)
    for a in range(len(s)):
        mins = minimal_join_covers(s, a)
        for f in all_chains:
            if not s.leq[a, s.join_of(f)]:
                continue
            df = down_set(p, canonical_antichain(p, f))
            if not any(is_subset(m, df) for m in mins):
                return False, True
    return True, True


def has_wmjcrp(s):
    return wmjcrp_check(s)[0]


def is_distributive(s):
    """a <= b v c forces a = y v z with y <= b and z <= c.

    For lattices the answer is cross-checked against the identity
    a ^ (b v c) = (a ^ b) v (a ^ c).
    """
    n = len(s)
    down = [np.flatnonzero(s.leq[:, i]) for i in range(n)]
    result = True
    for b in range(n):
        for c in range(b, n):
            reach = np.zeros(n, dtype=bool)
            reach[s.join[np.ix_(down[b], down[c])].ravel()] = True
            if not reach[down[s.join[b, c]]].all():
                result = False
                break
        if not result:
            break
    if isinstance(s, Lattice):
        j, m = s.join, s.meet
        a = np.arange(n)[:, None, None]
        lhs = m[a, j[None, :, :]]
        rhs = j[m[:, :, None], m[:, None, :]]
        if bool((lhs == rhs).all()) != result:
            raise LatgraphError("distributivity tests disagree")
    return result


def is_modular(s):
    """a <= b <= a v c forces b = a v x for some x <= c."""
    n = len(s)
    leq, join = s.leq, s.join
    for a in range(n):
        for c in range(n):
            reach = np.zeros(n, dtype=bool)
            reach[join[a, np.flatnonzero(leq[:, c])]] = True
            interval = leq[a, :] & leq[:, join[a, c]]
            if (interval & ~reach).any():
                return False
    return True


def is_relatively_complemented(s):
    """Every x <= y <= z has c with y ^ c = x (meet existing) and y v c = z."""
    n = len(s)
    p = s.poset
    meet = [[partial_meet(p, y, c) for c in range(n)] for y in range(n)]
    for y in range(n):
        for x in members(s.down[y]):
            for z in members(s.up[y]):
                if not any(meet[y][c] == x and s.join[y, c] == z for c in range(n)):
                    return False
    return True
