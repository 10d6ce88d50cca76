"""The neighbourhood topology on J(L), closed hereditary sets and the
anti-isomorphism between Con(L) and closed hereditary sets."""

import itertools

from .bits import is_subset, members, size
from .congruence import GaloisReport, all_congruences, galois_F, galois_G
from .depgraph import all_hereditary, dependency_graph, is_hereditary
from .errors import BadPair, check_size
from .semilattice import is_distributive, join_irreducibles, join_primes

__all__ = [
    "neighborhood",
    "neighborhood_basis",
    "closure",
    "is_open",
    "is_discrete",
    "closed_hereditary",
    "check_topology",
    "verify_main_theorem",
    "is_strongly_distributive",
]

MAX_CLOSED_HEREDITARY = 20


def _strictly_below(L, v):
    return [x for x in members(L.down[v]) if x != v]


def neighborhood(L, v, x):
    """Join-irreducibles below ``v`` but not below ``x``, for x < v."""
    jl = join_irreducibles(L)
    if not jl >> v & 1:
        raise BadPair(f"{L.names[v]!r} is not join-irreducible")
    if x == v or not L.leq[x, v]:
        raise BadPair(f"{L.names[x]!r} is not strictly below {L.names[v]!r}")
    return L.down[v] & ~L.down[x] & jl


def neighborhood_basis(L):
    """Map each join-irreducible v to the tuple of V(v, x) over x < v."""
    return {
        v: tuple(neighborhood(L, v, x) for x in _strictly_below(L, v))
        for v in members(join_irreducibles(L))
    }


def closure(L, X, basis=None):
    """Points all of whose basic neighbourhoods meet ``X``.

    Any two basic neighbourhoods of a point contain a third, and every
    neighbourhood of u contains some V(u, y), so testing V(u, y) is exact.
    """
    if basis is None:
        basis = neighborhood_basis(L)
    out = 0
    for u, nbds in basis.items():
        if all(nb & X for nb in nbds):
            out |= 1 << u
    return out


def is_open(L, X, basis=None):
    if basis is None:
        basis = neighborhood_basis(L)
    return all(any(is_subset(nb, X) for nb in basis[u]) for u in members(X))


def is_discrete(L, basis=None):
    """Every singleton {v} is a basic neighbourhood of v."""
    if basis is None:
        basis = neighborhood_basis(L)
    return all(any(nb == 1 << v for nb in nbds) for v, nbds in basis.items())


def closed_hereditary(L, graph=None, herd=None):
    """Hereditary subsets of J(L) that equal their closure, ascending."""
    if graph is None:
        graph = dependency_graph(L)
    check_size(size(graph.vertices), MAX_CLOSED_HEREDITARY, "graph")
    if herd is None:
        herd = all_hereditary(graph)
    basis = neighborhood_basis(L)
    return [h for h in herd if closure(L, h, basis) == h]


def _subsets(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def check_topology(L, pair_limit=8):
    """Exhaustively test the neighbourhood-system axioms, T1, clopen basic
    sets and the closure laws on one lattice.

    Monotonicity and finite unions are checked on all pairs of subsets
    when |J(L)| <= ``pair_limit``, otherwise on pairs (X, X + {v}) and
    (X, {v}).  Returns a GaloisReport whose counterexamples name the law.
    """
    jl = join_irreducibles(L)
    basis = neighborhood_basis(L)
    report = GaloisReport("topology")
    for v, nbds in basis.items():
        below = _strictly_below(L, v)
        report.record("basis_nonempty", bool(nbds), v=L.names[v])
        for x, nb in zip(below, nbds):
            report.record("basis_membership", nb >> v & 1, v=L.names[v], x=L.names[x])
            for u in members(nb):
                ux = int(L.meet[u, x])
                report.record(
                    "basis_refinement",
                    ux != u and is_subset(neighborhood(L, u, ux), nb),
                    v=L.names[v], x=L.names[x], u=L.names[u],
                )
            report.record(
                "clopen", closure(L, nb, basis) == nb, v=L.names[v], x=L.names[x]
            )
        for (y1, n1), (y2, n2) in itertools.combinations(zip(below, nbds), 2):
            y = int(L.join[y1, y2])
            report.record(
                "basis_intersection",
                y != v and is_subset(neighborhood(L, v, y), n1 & n2),
                v=L.names[v], y1=L.names[y1], y2=L.names[y2],
            )
        meet_all = jl
        for nb in nbds:
            meet_all &= nb
        report.record("T1", meet_all == 1 << v, v=L.names[v])

    # a common point of two basic sets has a basic set inside both
    flat = [(v, nb) for v, nbds in basis.items() for nb in nbds]
    for (v1, n1), (v2, n2) in itertools.combinations(flat, 2):
        for u in members(n1 & n2):
            report.record(
                "common_point_basis",
                any(is_subset(nb, n1 & n2) for nb in basis[u]),
                u=L.names[u], v1=L.names[v1], v2=L.names[v2],
            )

    subsets = list(_subsets(jl))
    cl = {x: closure(L, x, basis) for x in subsets}
    for x in subsets:
        report.record("inflationary", is_subset(x, cl[x]), X=L.labels(x))
        report.record("idempotent", cl[cl[x]] == cl[x], X=L.labels(x))
    report.record("empty_closed", cl[0] == 0)
    if size(jl) <= pair_limit:
        pairs = itertools.product(subsets, repeat=2)
    else:
        pairs = (
            (x, y)
            for x in subsets
            for v in members(jl)
            for y in (x | 1 << v, 1 << v)
        )
    for x, y in pairs:
        if is_subset(x, y):
            report.record("monotone", is_subset(cl[x], cl[y]), X=L.labels(x), Y=L.labels(y))
        report.record("finite_unions", cl[x | y] == cl[x] | cl[y], X=L.labels(x), Y=L.labels(y))
    report.info["discrete"] = is_discrete(L, basis)
    report.record("discrete", report.info["discrete"])
    return report


def verify_main_theorem(L, cons=None, graph=None):
    """F is an order-reversing bijection Con(L) -> closed hereditary sets
    with inverse G restricted to them; complements of closed hereditary
    sets are exactly the open co-hereditary sets."""
    if graph is None:
        graph = dependency_graph(L)
    if cons is None:
        cons = all_congruences(L, "lattice")
    herd = all_hereditary(graph)
    closed = closed_hereditary(L, graph, herd)
    basis = neighborhood_basis(L)
    report = GaloisReport("lattice")
    report.info["discrete"] = is_discrete(L, basis)
    report.counts = {
        "congruences": len(cons),
        "hereditary": len(herd),
        "closed_hereditary": len(closed),
    }

    f_img = [galois_F(L, t, graph) for t in cons]
    closed_set = set(closed)
    report.record(
        "image_is_closed_hereditary",
        set(f_img) == closed_set,
        missing=[L.labels(h) for h in sorted(closed_set - set(f_img))],
        extra=[L.labels(h) for h in sorted(set(f_img) - closed_set)],
    )
    report.record("F_injective", len(set(f_img)) == len(f_img))
    for t, fh in zip(cons, f_img):
        back = galois_G(L, fh, "lattice", graph)
        report.record("G_after_F", back == t, congruence=t.block_names())
    g_img = {}
    for h in closed:
        g_img[h] = galois_G(L, h, "lattice", graph)
        report.record(
            "F_after_G", galois_F(L, g_img[h], graph) == h, hereditary=L.labels(h)
        )
        report.record("G_lands_in_Con", g_img[h] in cons, hereditary=L.labels(h))
    for (i, t1), (j, t2) in itertools.product(enumerate(cons), repeat=2):
        if bool(cons.leq[i, j]) != is_subset(f_img[j], f_img[i]):
            report.record(
                "order_reversing", False,
                left=t1.block_names(), right=t2.block_names(),
            )
    report.laws.setdefault("order_reversing", True)

    jl = graph.vertices
    co_open = [
        y for y in _subsets(jl)
        if is_hereditary(graph, jl & ~y) and is_open(L, y, basis)
    ]
    report.counts["open_cohereditary"] = len(co_open)
    report.record(
        "complement_bijection",
        sorted(jl & ~h for h in closed) == sorted(co_open),
    )
    return report


def is_strongly_distributive(L):
    """Distributive and every element is a join of join-primes."""
    if not is_distributive(L):
        return False
    primes = join_primes(L)
    return all(L.join_of(primes & L.down[a]) == a for a in range(len(L)))
