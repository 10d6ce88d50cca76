"""
Congruences and the Galois connection
=====================================

Congruences are enumerated as joins of principal ones.  Each congruence
is sent to a hereditary set of the dependency graph and back.
"""

import latgraph as lg

m3 = lg.catalog("m3")

# As a join-semilattice M3 has many congruences; as a lattice it is simple.
print(len(lg.all_congruences(m3, "semilattice")))
print(len(lg.all_congruences(m3, "lattice")))

# A principal congruence on the Fig.1 semilattice.
s = lg.catalog("fig1")
t = lg.principal_congruence(s, s.index("u"), s.index("x"), "semilattice")
print(t.block_names())

# The two sets of irreducibles attached to t.
print("J_T:", s.labels(lg.j_theta(s, t)))
print("bar set:", s.labels(lg.j_bar_theta(s, t)))

# v <=_T u holds even though v is not below u, which is why v drops out
# of the bar set under the defining condition.
print(lg.leq_theta(s, t, s.index("v"), s.index("u")), bool(s.leq[s.index("v"), s.index("u")]))

# From a hereditary set back to a congruence.
n5 = lg.catalog("n5")
g = lg.dependency_graph(n5)
for h in lg.all_hereditary(g):
    print(n5.labels(h), "->", lg.galois_G(n5, h, "lattice", g).block_names())

# All Galois laws at once.  For the semilattice kind on M3 the round trip
# through hereditary sets loses information.
rep = lg.verify_galois(m3, "semilattice")
print(rep.ok, rep.counts, rep.info)
rep = lg.verify_galois(n5, "lattice")
print(rep.ok, rep.counts, rep.info)
