"""Replay of the cube computation, end to end.

Eight product lattices indexed by subsets of {1,2,3}, twelve 0,1-lattice
embeddings with explicit formulas, a difference operation spread over the
cube by inheritance-then-splitting, and the forced-value computation whose
triangle inequality fails on the last coordinate.
"""

from latspec import (build_cube, expand_cube_v0, kernel_not_closed,
                     kernel_not_convex, run_rho_contradiction, verify_cube)

cube = build_cube()
rep = verify_cube(cube)
print(f"cube verified: {rep.ok} ({rep.n_maps} maps, {rep.n_faces} faces, "
      f"{rep.n_amalgams} strong amalgams)")

S = frozenset
tt = cube.to_tuple[S({1, 2, 3})]
a = cube.homs[S({1, 2}), S({1, 2, 3})]
tm = cube.to_mask[S({1, 2})]
print("a(2,1) =", tt(a(tm((2, 1)))), "  a(2,0) =", tt(a(tm((2, 0)))))

expanded, v0rep = expand_cube_v0(cube)
print("difference expansion ok:", v0rep.ok,
      "| triangle violations observed:", v0rep.triangle_violations)
d12 = expanded[S({1, 2})]
print("(2,1) ∖ (1,2) in the grid:", cube.to_tuple[S({1, 2})](
    d12.diff(tm((2, 1)), tm((1, 2)))))

rho = run_rho_contradiction(cube)
print("forced pair solutions:", rho.forced_solutions[1, 2])
print("pushed values:", rho.pushed)
print("join of first and third:", rho.join_value,
      "| second exceeds it on the last coordinate:", rho.last_coordinate)

print("closed kernel ok:", kernel_not_closed().ok)
print("convex kernel ok:", kernel_not_convex().ok)
