"""Lattice homomorphisms and the decidable tests that separate spectra classes.

``is_closed`` and ``is_convex`` implement, on finite bounded distributive
lattices, the two witness-style conditions used to tell apart maps that can
or cannot arise from lattice-ordered groups and f-rings.  Both searches are
exhaustive and return the least counterexample in canonical order, so
failure messages are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .order import DLat, LatticeError, Poset, downset_lattice
from .spectra import CofinalityError, prime_spectrum


class NotAHomomorphismError(LatticeError):
    def __init__(self, kind, witness):
        self.kind = kind
        self.witness = witness
        super().__init__(f"map does not preserve {kind} at {witness}")


class LatHom:
    """A verified 0-lattice homomorphism between two DLats.

    The table is indexed by the domain's canonical element positions and
    stores codomain element masks.  Preservation of 0, join and meet is
    checked at construction; the remaining flags (top, surjective,
    injective, cofinal) are computed once and stored.
    """

    __slots__ = ("dom", "cod", "table", "preserves_top", "surjective",
                 "injective", "cofinal")

    def __init__(self, dom: DLat, cod: DLat, table: Sequence[int]):
        table = tuple(table)
        if len(table) != dom.size:
            raise LatticeError("hom table has wrong length")
        for v in table:
            cod.check_member(v)
        self.dom = dom
        self.cod = cod
        self.table = table
        if table[dom.pos(dom.bottom)] != cod.bottom:
            raise NotAHomomorphismError("0", dom.bottom)
        els = dom.elements
        for i, x in enumerate(els):
            for j in range(i, len(els)):
                y = els[j]
                if self._app(x | y) != table[i] | table[j]:
                    raise NotAHomomorphismError("join", (dom.fmt(x), dom.fmt(y)))
                if self._app(x & y) != table[i] & table[j]:
                    raise NotAHomomorphismError("meet", (dom.fmt(x), dom.fmt(y)))
        self.preserves_top = self(dom.top) == cod.top
        rng = set(table)
        self.surjective = len(rng) == cod.size
        self.injective = len(rng) == dom.size
        # for bounded lattices cofinality reduces to f(top) = top; checked
        # definitionally in is_cofinal
        self.cofinal = self.preserves_top

    def _app(self, x: int) -> int:
        return self.table[self.dom.pos(x)]

    def __call__(self, x: int) -> int:
        return self.table[self.dom.pos(self.dom.check_member(x))]

    def image(self) -> set[int]:
        return set(self.table)

    def preimage_generator(self, q: int) -> int:
        """Generator of the principal ideal f⁻¹[↓q] (finite lattices only)."""
        acc = self.dom.bottom
        for i, x in enumerate(self.dom.elements):
            if DLat.leq(self.table[i], q):
                acc |= x
        return acc

    def compose(self, other: "LatHom") -> "LatHom":
        """self ∘ other (other applied first)."""
        if other.cod is not self.dom and other.cod != self.dom:
            raise LatticeError("composition domains do not match")
        return LatHom(other.dom, self.cod, [self(v) for v in other.table])

    @classmethod
    def identity(cls, lat: DLat) -> "LatHom":
        return cls(lat, lat, lat.elements)

    @classmethod
    def from_mapping(cls, dom: DLat, cod: DLat, table: Mapping[int, int]) -> "LatHom":
        return cls(dom, cod, [table[x] for x in dom.elements])

    @classmethod
    def from_function(cls, dom: DLat, cod: DLat, fn: Callable[[int], int]) -> "LatHom":
        return cls(dom, cod, [fn(x) for x in dom.elements])

    def __repr__(self):
        return f"LatHom({self.dom!r} -> {self.cod!r})"

    def __eq__(self, other):
        return (isinstance(other, LatHom) and self.dom == other.dom
                and self.cod == other.cod and self.table == other.table)

    def __hash__(self):
        return hash((self.dom, self.cod, self.table))


def dual_hom_of_poset_map(g: Sequence[int], p: Poset, q: Poset) -> LatHom:
    """The dual S ↦ g⁻¹[S] of a monotone poset map g: p -> q.

    Produces a 0,1-lattice homomorphism downsets(q) -> downsets(p); every
    0,1-homomorphism of finite distributive lattices arises this way.
    """
    if len(g) != p.n:
        raise LatticeError("poset map table has wrong length")
    for i in range(p.n):
        for j in range(p.n):
            if p.leq(i, j) and not q.leq(g[i], g[j]):
                raise LatticeError(f"poset map not monotone at ({i}, {j})")
    dom = downset_lattice(q)
    cod = downset_lattice(p)

    def pull(s: int) -> int:
        m = 0
        for i in range(p.n):
            if (s >> g[i]) & 1:
                m |= 1 << i
        return m

    return LatHom(dom, cod, [pull(s) for s in dom.elements])


@dataclass(frozen=True)
class CofinalReport:
    cofinal: bool
    top_rule_agrees: bool  # f(1) = 1 matches the definitional test
    unbounded_witness: int | None = None

    def to_dict(self):
        return {"cofinal": self.cofinal, "top_rule_agrees": self.top_rule_agrees}


def is_cofinal(f: LatHom) -> CofinalReport:
    """Every codomain element lies below some element of the range."""
    witness = None
    for y in f.cod.elements:
        if not any(DLat.leq(y, v) for v in f.table):
            witness = y
            break
    cofinal = witness is None
    return CofinalReport(cofinal, cofinal == f.preserves_top, witness)


@dataclass(frozen=True)
class ClosedReport:
    closed: bool
    witness: tuple[int, int, int] | None = None  # (a0, a1, b), least in canonical order

    def to_dict(self):
        return {"closed": self.closed, "witness": list(self.witness) if self.witness else None}


def is_closed(f: LatHom) -> ClosedReport:
    """f(a0) ≤ f(a1)∨b always needs x with a0 ≤ a1∨x and f(x) ≤ b.

    Exhaustive over all triples; the returned witness is the first failing
    triple in canonical element order.
    """
    dom, cod = f.dom, f.cod
    for i, a0 in enumerate(dom.elements):
        fa0 = f.table[i]
        for j, a1 in enumerate(dom.elements):
            fa1 = f.table[j]
            for b in cod.elements:
                if fa0 | fa1 | b != fa1 | b:
                    continue  # hypothesis f(a0) <= f(a1) v b fails
                if not any(a0 | a1 | x == a1 | x and DLat.leq(f.table[k], b)
                           for k, x in enumerate(dom.elements)):
                    return ClosedReport(False, (a0, a1, b))
    return ClosedReport(True)


@dataclass(frozen=True)
class ConvexReport:
    convex: bool
    # witness ideals are principal; each is named by its generator element
    witness: tuple[int, int, int] | None = None  # (p, q0, j) generators of (P, Q0, J)

    def to_dict(self):
        return {"convex": self.convex, "witness": list(self.witness) if self.witness else None}


def is_convex(f: LatHom) -> ConvexReport:
    """Prime-ideal interpolation test, exhaustive over (P, Q0, J).

    P ranges over Spec(dom), Q0 over Spec(cod), and J over all proper
    ideals of the codomain, taken literally with no narrowing.  Ideals of
    a finite lattice are the principal downsets, so the enumeration runs
    over generators.  Requires a cofinal map.
    """
    if not is_cofinal(f).cofinal:
        raise CofinalityError("is_convex requires a cofinal homomorphism")
    dom, cod = f.dom, f.cod
    sd = prime_spectrum(dom)
    sc = prime_spectrum(cod)
    # principal-downset generators: a prime ideal ↓g is recovered as the
    # join of its members
    def gen_of(spec, lat, k):
        acc = lat.bottom
        for pos, x in enumerate(lat.elements):
            if (spec.points[k] >> pos) & 1:
                acc |= x
        return acc

    dom_primes = sorted((gen_of(sd, dom, k) for k in range(sd.n_points)),
                        key=lambda m: (bin(m).count("1"), m))
    cod_primes = sorted((gen_of(sc, cod, k) for k in range(sc.n_points)),
                        key=lambda m: (bin(m).count("1"), m))
    proper = [j for j in cod.elements if j != cod.top]
    pregen = {q: f.preimage_generator(q) for q in cod.elements}
    for p in dom_primes:
        for q0 in cod_primes:
            for j in proper:
                if not DLat.leq(q0, j):
                    continue
                if not (DLat.leq(pregen[q0], p) and DLat.leq(p, pregen[j])):
                    continue
                if not any(DLat.leq(q0, q) and DLat.leq(q, j) and pregen[q] == p
                           for q in cod_primes):
                    return ConvexReport(False, (p, q0, j))
    return ConvexReport(True)


@dataclass(frozen=True)
class HomCensus:
    """One-call summary of all homomorphism flags."""

    valid: bool
    preserves_bottom: bool
    preserves_top: bool
    surjective: bool
    injective: bool
    cofinal: bool
    closed: bool
    closed_witness: tuple[int, int, int] | None
    convex: bool | None  # None when the map is not cofinal
    convex_witness: tuple[int, int, int] | None

    def to_dict(self):
        return {
            "valid": self.valid,
            "preserves_bottom": self.preserves_bottom,
            "preserves_top": self.preserves_top,
            "surjective": self.surjective,
            "injective": self.injective,
            "cofinal": self.cofinal,
            "closed": self.closed,
            "closed_witness": list(self.closed_witness) if self.closed_witness else None,
            "convex": self.convex,
            "convex_witness": list(self.convex_witness) if self.convex_witness else None,
        }


def hom_census(f: LatHom) -> HomCensus:
    cof = is_cofinal(f)
    cl = is_closed(f)
    if cof.cofinal:
        cv = is_convex(f)
        convex, cvw = cv.convex, cv.witness
    else:
        convex, cvw = None, None
    return HomCensus(
        valid=True,
        preserves_bottom=True,
        preserves_top=f.preserves_top,
        surjective=f.surjective,
        injective=f.injective,
        cofinal=cof.cofinal,
        closed=cl.closed,
        closed_witness=cl.witness,
        convex=convex,
        convex_witness=cvw,
    )
