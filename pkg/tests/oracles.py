"""Brute-force oracles that share no code path with the library routines
they check.  Only the validated order table and join table are reused."""

import itertools

import numpy as np


def subsets(indices):
    indices = list(indices)
    for r in range(len(indices) + 1):
        yield from itertools.combinations(indices, r)


def as_mask(items):
    m = 0
    for i in items:
        m |= 1 << i
    return m


def big_join(s, items):
    out = s.zero
    for i in items:
        out = int(s.join[out, i])
    return out


def join_irreducible_by_definition(s):
    """u is join-irreducible iff u = join(F) forces u in F, for all F."""
    n = len(s)
    out = set()
    for u in range(n):
        if all(u in f for f in subsets(range(n)) if big_join(s, f) == u):
            out.add(u)
    return out


def join_prime_by_definition(s):
    n = len(s)
    out = set()
    for u in range(n):
        if u == s.zero:
            continue
        ok = True
        for f in subsets(range(n)):
            if s.leq[u, big_join(s, f)] and not any(s.leq[u, x] for x in f):
                ok = False
                break
        if ok:
            out.add(u)
    return out


def minimal_covers_over_all_subsets(s, a):
    """C-minimal members of the family of all S-covers of a (no antichain
    shortcut), vectorised over the 2^n subsets."""
    n = len(s)
    masks = np.arange(1 << n, dtype=np.int64)
    joins = np.full(1 << n, s.zero, dtype=np.int64)
    downs = np.zeros(1 << n, dtype=np.int64)
    down = [sum(1 << i for i in range(n) if s.leq[i, j]) for j in range(n)]
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        joins[m] = s.join[joins[rest], low]
        downs[m] = downs[rest] | down[low]
    covers = masks[s.leq[a, joins]]
    cover_downs = downs[s.leq[a, joins]]
    out = []
    for x, dx in zip(covers.tolist(), cover_downs.tolist()):
        refining = covers[(covers & ~dx) == 0]
        if ((refining & x) == x).all():
            out.append(x)
    return sorted(out)


def partitions(n):
    """All set partitions of range(n) as lists of blocks."""
    if n == 0:
        yield []
        return
    for part in partitions(n - 1):
        for k in range(len(part)):
            yield part[:k] + [part[k] | {n - 1}] + part[k + 1:]
        yield part + [{n - 1}]


def congruence_partitions(s, with_meet):
    """Partitions compatible with join (and meet), checked pair by pair."""
    n = len(s)
    ops = [s.join] + ([s.meet] if with_meet else [])
    found = []
    for part in partitions(n):
        block = {x: k for k, b in enumerate(part) for x in b}
        ok = all(
            block[int(op[x, c])] == block[int(op[y, c])]
            for b in part
            for x in b
            for y in b
            for c in range(n)
            for op in ops
        )
        if ok:
            found.append(part)
    return found


def hereditary_by_subsets(g):
    verts = [i for i in range(len(g.succ)) if g.vertices >> i & 1]
    out = []
    for f in subsets(verts):
        h = as_mask(f)
        if all(g.succ[u] & ~h == 0 for u in f):
            out.append(h)
    return sorted(out)


def down_closed_subsets(p):
    n = len(p)
    out = []
    for f in subsets(range(n)):
        m = as_mask(f)
        if all(p.leq[x, y] <= bool(m >> x & 1) for y in f for x in range(n)):
            out.append(m)
    return sorted(out)
