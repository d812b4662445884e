"""Lexicographic products: a totally ordered integer layer over PL functions.

Basis vectors at lower chain positions are "way below" higher ones
(every multiple stays under), and pairwise orthogonal sets of two or more
strictly positive elements are forced down into the PL layer.
"""

from latspec import LexPL, ideal_leq, orthogonal_set_check, way_below
from latspec.lexgroup import PrincipalIdeal
from latspec.plfun import pl_diff, pl_generators

a, b = pl_generators()
c0, c1 = LexPL.basis(2, 0), LexPL.basis(2, 1)

print("c0 << c1:", way_below(c0, c1), "   c1 << c0:", way_below(c1, c0))
print("(0, a+b) << c1:", way_below(LexPL.from_pl(2, a) + LexPL.from_pl(2, b), c1))

# joins resolve by lex dominance first
pa = LexPL.from_pl(2, a)
print("c1 ∨ (0, a) == c1:", c1.join(pa) == c1)
print("compare((0,a), (0,b)):", pa.compare(LexPL.from_pl(2, b)))

# ideal containment: leading positions decide under a nonzero lex part
print("<c0> ⊆ <c1>:", ideal_leq(c0, c1).holds, "  <c1> ⊆ <c0>:", ideal_leq(c1, c0).holds)
print("<(0, 7a)> == <c1> ∨ <c0>?",
      PrincipalIdeal(LexPL.from_pl(2, a).scale(7)) == PrincipalIdeal(c1).join(PrincipalIdeal(c0)))

# orthogonality pushes sets into the PL layer
good = [LexPL.from_pl(2, pl_diff(a, b)), LexPL.from_pl(2, pl_diff(b, a))]
print("{(a∖b, b∖a)}:", orthogonal_set_check(good).to_dict())
bad = [c1, pa]
rep = orthogonal_set_check(bad)
print("{c1, (0,a)} orthogonal?", rep.pairwise_orthogonal,
      "| meet of the pair is nonzero, as the lex layer is a chain")
