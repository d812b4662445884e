"""Exact piecewise-linear functions on the quadrant.

The free abelian lattice group on two nonnegative generators lives as
integer PL functions: a and b are the coordinate projections, and every
term in +, -, ∨, ∧ is a fan of cones with one linear functional each.
"""

from fractions import Fraction

from latspec import pl_combine, pl_eval, pl_generators, support_connected
from latspec.plfun import (pl_add, pl_diff, pl_ideal_leq, pl_join, pl_meet,
                           pl_scale, pl_sub)

a, b = pl_generators()
print("a(3,5) =", pl_eval(a, 3, 5), "  b(3,5) =", pl_eval(b, 3, 5))

j = pl_join(a, b)
print("a ∨ b fan:", j.rays, "->", j.coeffs, "  (crossing ray inserted at x=y)")
print("(a ∨ b)(1/2, 2) =", pl_eval(j, Fraction(1, 2), 2))

# truncated difference a∖b = (a - b) ∨ 0
d = pl_diff(a, b)
print("(a∖b)(3,1) =", pl_eval(d, 3, 1), "  (a∖b)(1,3) =", pl_eval(d, 1, 3))
print("(a∖b) ∧ (b∖a) == 0:", pl_meet(d, pl_diff(b, a)) == pl_combine("abs", pl_sub(a, a)))

# principal-ideal containment <x> ⊆ <y>: ray dominance with the least bound
r = pl_ideal_leq(a, pl_add(a, b))
print("<a> ⊆ <a+b>:", r.holds, "with |a| <=", r.bound, "* |a+b|")
r2 = pl_ideal_leq(pl_add(a, b), a)
print("<a+b> ⊆ <a>:", r2.holds, "| witness direction where a vanishes:", r2.witness)

# support connectivity decides direct indecomposability of <a+b>
print("support of a+b connected:", support_connected(pl_add(a, b)))
lobes = pl_join(pl_diff(a, pl_scale(2, b)), pl_diff(b, pl_scale(2, a)))
print("support of (a-2b)⁺ ∨ (b-2a)⁺ connected:", support_connected(lobes),
      " (two sectors: x > 2y and y > 2x)")
