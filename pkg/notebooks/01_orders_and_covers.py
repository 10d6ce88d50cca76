"""
Orders, joins and minimal covers
================================

Build a small semilattice from its cover relation and look at the pieces
everything else is made from.
"""

# Structures are built from element names and cover pairs.
import latgraph as lg

s = lg.catalog("fig1")
print(s.names)
print(s.poset.cover_names())

# The order lives in a numpy boolean matrix; joins in an integer table.
print(s.leq.astype(int))
print(s.join)

# Join-irreducibles have exactly one lower cover.
ji = lg.join_irreducibles(s)
print("J(S) =", s.labels(ji))
print("join-primes =", s.labels(lg.join_primes(s)))

# Minimal join-covers of a: every cover of a refines to one of these.
a = s.index("a")
for cover in lg.minimal_join_covers(s, a):
    print("minimal cover of a:", s.labels(cover))

# Join-refinement compares sets by domination.
p = s.poset
print(lg.join_refines(p, p.mask("ux"), p.mask(["1"])))
print(lg.join_refines(p, p.mask(["1"]), p.mask("ux")))

# A saturated family always has a C-minimal member on a finite poset.
family = [p.mask("xv"), p.mask("uxv"), p.mask(["a"])]
print(lg.is_saturated(p, family), p.labels(lg.find_c_minimal(p, family)))

# Order ideals of any poset form a distributive lattice.
ideals = lg.build_lattice(lg.build_semilattice(lg.order_ideals(lg.build_poset("abc", [("a", "b")]))))
print(len(ideals), lg.is_distributive(ideals))
