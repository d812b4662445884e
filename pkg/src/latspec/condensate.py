"""Condensates of a lattice homomorphism over a symbolic index universe.

Given a 0-lattice homomorphism φ: A → B and an index set I, the condensate
is the sublattice of A × B^I of pairs (x, y) with y_i = φ(x) for all but
finitely many i.  Elements are stored as (base, deviations): the base value
x plus the finite map of indices where y differs from φ(x).  That finite
support makes condensates over symbolic countable or uncountable index
universes exactly computable; the cardinality tag is documentation only and
never enters a computation.

Renormalization (dropping deviation entries equal to φ(base)) runs after
every construction, so equality of elements is plain equality of canonical
forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

from .homs import LatHom
from .order import LatticeError


class MixedCondensateError(LatticeError):
    """An operation received elements of two different condensates."""


@dataclass(frozen=True)
class IndexUniverse:
    """A finite, symbolic-countable, or symbolic-uncountable index set.

    Symbolic universes admit any string as an index name; only finitely
    many ever appear in an element, which is what makes the algebra exact.
    """

    kind: str  # "finite" | "countable" | "uncountable"
    names: tuple[str, ...] | None = None

    @classmethod
    def finite(cls, names: Sequence[str]) -> "IndexUniverse":
        names = tuple(names)
        if len(set(names)) != len(names):
            raise LatticeError("index names must be distinct")
        return cls("finite", names)

    @classmethod
    def countable(cls) -> "IndexUniverse":
        return cls("countable")

    @classmethod
    def uncountable(cls) -> "IndexUniverse":
        return cls("uncountable")

    def admits(self, name: str) -> bool:
        if self.kind == "finite":
            return name in (self.names or ())
        return True

    def describe(self) -> str:
        if self.kind == "finite":
            return f"finite({', '.join(self.names or ())})"
        return f"symbolic {self.kind} index set"


@dataclass(frozen=True)
class CondElem:
    """A condensate element in canonical form: base plus finite deviations."""

    base: int
    dev: tuple[tuple[str, int], ...]
    cond: "Condensate" = field(repr=False, compare=True)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.dev)

    def value_at(self, name: str) -> int:
        for k, v in self.dev:
            if k == name:
                return v
        return self.cond.phi(self.base)

    def fmt(self) -> str:
        a, b = self.cond.phi.dom, self.cond.phi.cod
        devs = ", ".join(f"{k}↦{b.fmt(v)}" for k, v in self.dev)
        return f"({a.fmt(self.base)}, {{{devs}}})"


class Condensate:
    """Handle for Cond(φ, I): element construction and pointwise algebra."""

    def __init__(self, phi: LatHom, universe: IndexUniverse):
        self.phi = phi
        self.universe = universe

    def element(self, base: int, dev: Mapping[str, int] | Iterable[tuple[str, int]] = ()) -> CondElem:
        """Normalized element: entries equal to φ(base) are dropped."""
        a, b = self.phi.dom, self.phi.cod
        a.check_member(base)
        items = dict(dev)
        fb = self.phi(base)
        norm = []
        for name in sorted(items):
            if not self.universe.admits(name):
                raise LatticeError(f"index {name!r} not in {self.universe.describe()}")
            v = b.check_member(items[name])
            if v != fb:
                norm.append((name, v))
        return CondElem(base, tuple(norm), self)

    @property
    def bottom(self) -> CondElem:
        return self.element(self.phi.dom.bottom)

    def _pair(self, s: CondElem, t: CondElem) -> None:
        if s.cond is not self or t.cond is not self:
            raise MixedCondensateError("elements belong to different condensates")

    def join(self, s: CondElem, t: CondElem) -> CondElem:
        self._pair(s, t)
        names = sorted(set(s.support) | set(t.support))
        return self.element(s.base | t.base,
                            {n: s.value_at(n) | t.value_at(n) for n in names})

    def meet(self, s: CondElem, t: CondElem) -> CondElem:
        self._pair(s, t)
        names = sorted(set(s.support) | set(t.support))
        return self.element(s.base & t.base,
                            {n: s.value_at(n) & t.value_at(n) for n in names})

    def leq(self, s: CondElem, t: CondElem) -> bool:
        self._pair(s, t)
        if s.base | t.base != t.base:
            return False
        for n in set(s.support) | set(t.support):
            if s.value_at(n) | t.value_at(n) != t.value_at(n):
                return False
        return True

    def eq(self, s: CondElem, t: CondElem) -> bool:
        self._pair(s, t)
        return s.base == t.base and s.dev == t.dev

    def op(self, name: str, s: CondElem, t: CondElem):
        """Dispatch join|meet|leq|eq by name (the CLI entry point)."""
        try:
            fn = {"join": self.join, "meet": self.meet,
                  "leq": self.leq, "eq": self.eq}[name]
        except KeyError:
            raise LatticeError(f"unknown condensate operation {name!r}") from None
        return fn(s, t)

    def stage(self, names: Sequence[str]) -> list[CondElem]:
        """All elements with support inside the given finite index set."""
        names = list(names)
        for n in names:
            if not self.universe.admits(n):
                raise LatticeError(f"index {n!r} not in {self.universe.describe()}")
        if len(set(names)) != len(names):
            raise LatticeError("stage index names must be distinct")
        a, b = self.phi.dom, self.phi.cod
        out = []
        for base in a.elements:
            for vals in product(b.elements, repeat=len(names)):
                out.append(self.element(base, dict(zip(names, vals))))
        # normalization collapses nothing here: distinct (base, values)
        # tuples give distinct canonical forms
        return out


def cond_make(phi: LatHom, universe: IndexUniverse) -> Condensate:
    """Condensate of a verified homomorphism over an index universe."""
    return Condensate(phi, universe)


@dataclass(frozen=True)
class StageIsoReport:
    """Outcome of comparing a finite stage C_J with the product A × B^J."""

    stage_size: int
    product_size: int
    bijective: bool
    is_lattice_iso: bool
    bounds_ok: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.is_lattice_iso and self.bounds_ok

    def to_dict(self):
        return {"stage_size": self.stage_size, "product_size": self.product_size,
                "bijective": self.bijective, "is_lattice_iso": self.is_lattice_iso,
                "bounds_ok": self.bounds_ok, "ok": self.ok}


def finite_stage_iso(cond: Condensate, names: Sequence[str]) -> StageIsoReport:
    """Verify C_J ≅ A × B^J as bounded lattices, exhaustively."""
    a, b = cond.phi.dom, cond.phi.cod
    names = list(names)
    prod_elems = [(x, vals) for x in a.elements
                  for vals in product(b.elements, repeat=len(names))]

    def embed(pair):
        x, vals = pair
        return cond.element(x, dict(zip(names, vals)))

    images = [embed(p) for p in prod_elems]
    bij = len(set(images)) == len(prod_elems)
    iso = True
    for p in prod_elems:
        if not iso:
            break
        for q in prod_elems:
            pj = (p[0] | q[0], tuple(u | v for u, v in zip(p[1], q[1])))
            pm = (p[0] & q[0], tuple(u & v for u, v in zip(p[1], q[1])))
            if cond.join(embed(p), embed(q)) != embed(pj):
                iso = False
                break
            if cond.meet(embed(p), embed(q)) != embed(pm):
                iso = False
                break
    bounds = (embed((a.bottom, tuple(b.bottom for _ in names))) == cond.bottom
              and embed((a.top, tuple(b.top for _ in names)))
              == cond.element(a.top, {n: b.top for n in names}))
    return StageIsoReport(len(set(images)), len(prod_elems), bij, iso, bounds)


def stage_inclusion(cond: Condensate, small: Sequence[str], large: Sequence[str]) -> bool:
    """C_J ⊆ C_K for J ⊆ K, checked element by element."""
    if not set(small) <= set(large):
        raise LatticeError("first stage is not a subset of the second")
    big = set(cond.stage(large))
    return all(e in big for e in cond.stage(small))


class AlmostConstantSurjection:
    """The stage-respecting map Cond(id_A, I) → Cond(φ, I).

    Sends (x, (x_i)_i) to (x, (φ(x_i))_i): base fixed, each deviation
    pushed through φ, then renormalized.
    """

    def __init__(self, phi: LatHom, universe: IndexUniverse):
        self.phi = phi
        self.universe = universe
        self.source = Condensate(LatHom.identity(phi.dom), universe)
        self.target = Condensate(phi, universe)

    def apply(self, s: CondElem) -> CondElem:
        if s.cond is not self.source:
            raise MixedCondensateError("element does not belong to the source condensate")
        return self.target.element(s.base, {n: self.phi(v) for n, v in s.dev})

    def verify_stage(self, names: Sequence[str]) -> "SurjectionReport":
        """Exhaustively check 0,1-homomorphism and surjectivity on a stage."""
        src = self.source.stage(names)
        tgt = self.target.stage(names)
        hom_ok = True
        for s in src:
            if not hom_ok:
                break
            for t in src:
                if (self.apply(self.source.join(s, t))
                        != self.target.join(self.apply(s), self.apply(t))):
                    hom_ok = False
                    break
                if (self.apply(self.source.meet(s, t))
                        != self.target.meet(self.apply(s), self.apply(t))):
                    hom_ok = False
                    break
        a = self.phi.dom
        bot_ok = self.apply(self.source.bottom) == self.target.bottom
        src_top = self.source.element(a.top, {n: a.top for n in names})
        tgt_top = self.target.element(a.top, {n: self.phi.cod.top for n in names})
        top_ok = self.apply(src_top) == tgt_top
        # brute-force preimage search over the source stage
        images = {self.apply(s) for s in src}
        missing = [t for t in tgt if t not in images]
        return SurjectionReport(hom_ok, bot_ok, top_ok, not missing,
                                len(src), len(tgt))


@dataclass(frozen=True)
class SurjectionReport:
    hom_ok: bool
    bottom_ok: bool
    top_ok: bool
    surjective: bool
    source_size: int
    target_size: int

    @property
    def ok(self) -> bool:
        return self.hom_ok and self.bottom_ok and self.top_ok and self.surjective

    def to_dict(self):
        return {"hom_ok": self.hom_ok, "bottom_ok": self.bottom_ok,
                "top_ok": self.top_ok, "surjective": self.surjective,
                "source_size": self.source_size, "target_size": self.target_size,
                "ok": self.ok}
