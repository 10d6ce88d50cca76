"""
Neighbourhoods and the anti-isomorphism
=======================================

Basic neighbourhoods V(v, x) generate a topology on the irreducibles.
Finite lattices give the discrete topology, so every hereditary set is
closed and congruences match hereditary sets one to one.
"""

import numpy as np

import latgraph as lg

n5 = lg.catalog("n5")
for v, nbds in lg.neighborhood_basis(n5).items():
    print(n5.names[v], [n5.labels(nb) for nb in nbds])

print("discrete:", lg.is_discrete(n5))
rep = lg.check_topology(n5)
print(rep.ok, sorted(rep.laws))

# The main correspondence on N5 and on chains.
rep = lg.verify_main_theorem(n5)
print(rep.ok, rep.counts)
counts = [lg.verify_main_theorem(lg.catalog(f"chain_{n}")).counts["congruences"] for n in range(1, 8)]
print(counts, np.log2(counts))

# Con(L) is itself a lattice, and it is always strongly distributive.
for name in ["m3", "n5", "bool_3", "mk_4"]:
    L = lg.catalog(name)
    con = lg.all_congruences(L, "lattice").as_lattice()
    print(name, len(con), lg.is_strongly_distributive(con))

# A random lattice, end to end.
L = lg.random_structure(42, 12, "lattice")
rep = lg.verify_main_theorem(L)
print(rep.ok, rep.counts)
