"""Condensates: almost-constant families over a symbolic index set.

An element of Cond(phi, I) is a base value x plus finitely many indexed
deviations from phi(x).  Finite supports make the algebra exact even when
I is tagged uncountable; the tag never enters a computation.
"""

from latspec import (Condensate, IndexUniverse, LatHom, Poset,
                     chain_lattice, dual_hom_of_poset_map, finite_stage_iso)
from latspec.condensate import AlmostConstantSurjection, stage_inclusion

eps = LatHom(chain_lattice(3), chain_lattice(2), [0, 1, 1])
cond = Condensate(eps, IndexUniverse.uncountable())

u = eps.dom.elements[1]
s = cond.element(u, {"xi0": 0})
t = cond.element(eps.dom.top)
print("s =", s.fmt(), "   top-constant =", t.fmt())
print("join:", cond.join(s, t).fmt(), "  (deviation at xi0 got renormalized away)")
print("meet:", cond.meet(s, cond.element(u)).fmt())

# every finite stage is a full product A x B^J
for k in range(3):
    rep = finite_stage_iso(cond, [f"xi{i}" for i in range(k)])
    print(f"stage |J|={k}: {rep.stage_size} elements, iso to product: {rep.ok}")
print("stages nest:", stage_inclusion(cond, ["xi0"], ["xi0", "xi1"]))

# the almost-constant surjection (x_i)_i -> (x_oo, (phi(x_i))_i), stagewise
phi = dual_hom_of_poset_map([0, 2], Poset.chain(2), Poset.chain(3))
acs = AlmostConstantSurjection(phi, IndexUniverse.uncountable())
for k in range(3):
    rep = acs.verify_stage([f"xi{i}" for i in range(k)])
    print(f"surjection on stage |J|={k}: hom={rep.hom_ok} "
          f"onto {rep.target_size} of {rep.source_size}: {rep.surjective}")
