"""Closed and convex homomorphisms, and the two maps that fail.

Two small chain maps carry the whole story: the zero-separating map
3-chain -> 2-chain is not closed, and the level map (0,1,1,2) from the
4-chain onto the 3-chain is not convex.
"""

from latspec import (LatHom, Poset, chain_lattice, dual_hom_of_poset_map,
                     hom_census, is_closed, is_convex, spec_map)

c3, c2 = chain_lattice(3), chain_lattice(2)

# eps sends exactly 0 to 0 (the unique zero-separating map)
eps = LatHom(c3, c2, [0, 1, 1])
rep = is_closed(eps)
print("eps closed?", rep.closed, "witness (a0, a1, b):", rep.witness)
print("  reading: f(1) <= f(u) ∨ 0 holds, but no x has 1 <= u ∨ x and f(x) <= 0")

# the quotient collapsing u down instead is closed and convex
quot = LatHom(c3, c2, [0, 0, 1])
print("quotient closed?", is_closed(quot).closed, " convex?", is_convex(quot).convex)

# phi is the dual of the poset map 1 -> 1, 2 -> 3 into the 3-element chain
phi = dual_hom_of_poset_map([0, 2], Poset.chain(2), Poset.chain(3))
print("phi level table:", [phi.cod.pos(v) for v in phi.table])
cv = is_convex(phi)
print("phi convex?", cv.convex, "witness ideals (P, Q0, J) generated by:",
      tuple(cv.witness))

# one-call census
print("census(eps):", hom_census(eps).to_dict())

# surjections dualize to spectral embeddings
res = spec_map(quot)
print("dual of the quotient embeds spectra?", res.injective and res.order_embedding)
