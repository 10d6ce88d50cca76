"""
Dependency graphs
=================

The graph on join-irreducibles records which irreducibles a cover of u
cannot do without.  Its shape reflects the shape of the lattice.
"""

import latgraph as lg

# M3: every irreducible depends on every other one.
m3 = lg.catalog("m3")
g = lg.dependency_graph(m3)
print(g.edge_names())
print("symmetric:", g.is_symmetric())

# N5 is not modular, and the graph is not symmetric either.
n5 = lg.catalog("n5")
g = lg.dependency_graph(n5)
print(g.edge_names())

# The same graph from minimal join-covers.
print(lg.edges_via_min_covers(n5) == g)

# Hereditary sets are closed under outgoing edges.
for h in lg.all_hereditary(g):
    print("hereditary:", n5.labels(h))
print(n5.labels(lg.hereditary_interior(g, n5.mask("ba"))))

# Collapsing strongly connected pieces gives a poset whose order ideals
# correspond to complements of hereditary sets.
q, blocks = lg.reachability_quotient(g)
print(q.names, q.cover_names())

# Distributive lattices only have loops.
b3 = lg.catalog("bool_3")
print(lg.dependency_graph(b3).loops_only())

# DOT output for graphviz.
print(lg.export_dot(lg.dependency_graph(m3), name="m3"))
