"""Assemble machine-readable analysis and verification reports."""

from . import __version__
from .bits import members
from .congruence import all_congruences, verify_galois
from .depgraph import (
    all_hereditary,
    check_reachability_correspondence,
    dependency_graph,
    edges_via_min_covers,
)
from .errors import CarrierTooLarge
from .order import Poset
from .semilattice import (
    Lattice,
    atoms,
    is_atomistic,
    is_distributive,
    is_modular,
    is_particle,
    is_relatively_complemented,
    join_irreducibles,
    join_primes,
    wmjcrp_check,
)
from .topology import (
    check_topology,
    closed_hereditary,
    is_discrete,
    is_strongly_distributive,
    verify_main_theorem,
)

__all__ = ["analyze", "verify", "graph_shape_counterexamples"]


def _names(s, mask):
    return [str(x) for x in s.labels(mask)]


def _poset_report(p, name):
    return {
        "name": name,
        "kind": "poset",
        "size": len(p),
        "elements": [str(x) for x in p.names],
        "covers": [[str(a), str(b)] for a, b in p.cover_names()],
        "version": __version__,
    }


def analyze(s, name="structure"):
    """Predicates, graph and counts for one structure."""
    if isinstance(s, Poset):
        return _poset_report(s, name)
    g = dependency_graph(s)
    wmjcrp, constructive = wmjcrp_check(s)
    out = {
        "name": name,
        "kind": s.kind,
        "size": len(s),
        "elements": [str(x) for x in s.names],
        "version": __version__,
        "join_irreducibles": _names(s, join_irreducibles(s)),
        "join_primes": _names(s, join_primes(s)),
        "atoms": _names(s, atoms(s)),
        "predicates": {
            "distributive": is_distributive(s),
            "modular": is_modular(s),
            "relatively_complemented": is_relatively_complemented(s),
            "atomistic": is_atomistic(s),
            "particle": is_particle(s),
            "wmjcrp": wmjcrp,
            "wmjcrp_constructive": constructive,
        },
        "notes": [
            "finite carrier: DCC holds automatically",
            "finite carrier: completely join-prime coincides with join-prime",
            "finite carrier: every ideal is principal, so Id(S) is isomorphic to S",
        ],
        "graph": {
            "vertices": _names(s, g.vertices),
            "edges": [[str(a), str(b)] for a, b in g.edge_names()],
            "symmetric": g.is_symmetric(),
            "loops_only": g.loops_only(),
        },
    }
    counts = {}
    try:
        counts["hereditary"] = len(all_hereditary(g))
        counts["semilattice_congruences"] = len(all_congruences(s, "semilattice"))
        if isinstance(s, Lattice):
            counts["lattice_congruences"] = len(all_congruences(s, "lattice"))
            counts["closed_hereditary"] = len(closed_hereditary(s, g))
    except CarrierTooLarge as exc:
        counts["skipped"] = str(exc)
    out["counts"] = counts
    if isinstance(s, Lattice):
        out["predicates"]["discrete_topology"] = is_discrete(s)
        out["predicates"]["strongly_distributive"] = is_strongly_distributive(s)
    return out


def graph_shape_counterexamples(s, g=None):
    """Graph-shape theorems as counterexample records."""
    if g is None:
        g = dependency_graph(s)
    out = []
    if is_distributive(s) and not g.loops_only():
        out.append({"law": "distributive_loops_only"})
    if is_modular(s) and not g.is_symmetric():
        out.append({"law": "modular_symmetric"})
    if is_relatively_complemented(s) and not g.is_symmetric():
        out.append({"law": "relatively_complemented_symmetric"})
    for p in members(join_primes(s)):
        if g.succ[p] != 1 << p:
            out.append({"law": "join_prime_loops_only", "vertex": str(s.names[p])})
    return out


def verify(s, name="structure"):
    """Run every verification pass that applies to ``s``."""
    doc = analyze(s, name)
    if isinstance(s, Poset):
        doc["counterexamples"] = []
        return doc
    g = dependency_graph(s)
    problems = []
    sections = {}

    oracle = edges_via_min_covers(s)
    if oracle != g:
        problems.append({"law": "edge_oracle", "oracle_edges": oracle.edge_names()})
    problems += graph_shape_counterexamples(s, g)
    for msg in check_reachability_correspondence(g):
        problems.append({"law": "reachability_quotient", "detail": msg})

    kinds = ["semilattice"] + (["lattice"] if isinstance(s, Lattice) else [])
    for kind in kinds:
        rep = verify_galois(s, kind, graph=g)
        sections[f"galois_{kind}"] = rep.as_dict()
        problems += [dict(c, section=f"galois_{kind}") for c in rep.counterexamples]

    if isinstance(s, Lattice):
        cons = all_congruences(s, "lattice")
        main = verify_main_theorem(s, cons, g)
        sections["main_theorem"] = main.as_dict()
        problems += [dict(c, section="main_theorem") for c in main.counterexamples]
        topo = check_topology(s)
        sections["topology"] = {"laws": topo.laws, "info": topo.info}
        problems += [dict(c, section="topology") for c in topo.counterexamples]
        sd = is_strongly_distributive(cons.as_lattice())
        sections["con_strongly_distributive"] = sd
        if not sd:
            problems.append({"law": "con_strongly_distributive"})

    doc["verification"] = sections
    doc["counterexamples"] = problems
    return doc
