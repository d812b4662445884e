"""Prime-ideal spectra of finite bounded distributive lattices.

A prime ideal of a finite lattice is a nonempty proper subset that is
downward closed, join closed, and satisfies x∧y ∈ P ⟹ x ∈ P or y ∈ P.
Every ideal of a finite lattice is the principal downset of its largest
element, so the honest brute-force enumeration below ranges over candidate
generators and re-checks all four defining conditions from scratch; it is
the oracle for the fast join-irreducible path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .order import DLat, LatticeError, bits, canon_key

#: Brute-force enumeration refuses lattices above this many elements.
BRUTEFORCE_SIZE_BOUND = 2 ** 16


@dataclass(frozen=True)
class Spectrum:
    """All prime ideals of a DLat, ordered by inclusion.

    ``points[k]`` is a bitmask over *element positions* of the lattice
    (canonical enumeration order), so point comparison is mask inclusion.
    ``unit[p]`` is, for the element at position ``p``, the bitmask of points
    not containing that element: the unit map a ↦ {P : a ∉ P}.
    """

    lattice: DLat
    points: tuple[int, ...]
    unit: tuple[int, ...]

    @property
    def n_points(self) -> int:
        return len(self.points)

    def point_leq(self, i: int, j: int) -> bool:
        return self.points[i] | self.points[j] == self.points[j]

    def point_elements(self, i: int) -> list[int]:
        """The prime ideal at point i, as lattice element masks."""
        els = self.lattice.elements
        return [els[p] for p in bits(self.points[i])]

    def order_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n_points) for j in range(self.n_points)
                if i != j and self.point_leq(i, j)]


def _point_masks_to_spectrum(lat: DLat, raw_points: list[int]) -> Spectrum:
    pts = sorted(set(raw_points), key=canon_key)
    unit = []
    for p in range(lat.size):
        m = 0
        for k, pt in enumerate(pts):
            if not (pt >> p) & 1:
                m |= 1 << k
        unit.append(m)
    return Spectrum(lat, tuple(pts), tuple(unit))


def prime_spectrum(lat: DLat) -> Spectrum:
    """Spectrum via the join-irreducible shortcut.

    For the downset lattice of a base poset, the prime ideals are exactly
    I_p = {x : p ∉ x} for base elements p, and p ≤ q iff I_p ⊆ I_q.
    """
    els = lat.elements
    pts = []
    for p in range(lat.base.n):
        m = 0
        for pos, x in enumerate(els):
            if not (x >> p) & 1:
                m |= 1 << pos
        pts.append(m)
    return _point_masks_to_spectrum(lat, pts)


def prime_spectrum_bruteforce(lat: DLat, size_bound: int = BRUTEFORCE_SIZE_BOUND) -> Spectrum:
    """Oracle path: enumerate ideals as principal downsets, test primality.

    Every nonempty proper ideal candidate is re-verified to be downward
    closed and join closed before the prime condition is tested.
    """
    if lat.size > size_bound:
        raise LatticeError(f"brute-force spectrum refused for size {lat.size} > {size_bound}")
    els = lat.elements
    pts = []
    for gen in els:
        if gen == lat.top:
            continue  # proper ideals only
        members = [x for x in els if x | gen == gen]
        mask = 0
        for x in members:
            mask |= 1 << lat.pos(x)
        # ideal sanity, from the definitions
        ok = all((y | gen == gen) for x in members for y in els if y | x == x)
        ok = ok and all((x | y) | gen == gen for x in members for y in members)
        if not ok:
            raise LatticeError("principal downset failed ideal re-check")
        prime = True
        for x in els:
            if prime:
                for y in els:
                    if (x & y) | gen == gen and x | gen != gen and y | gen != gen:
                        prime = False
                        break
        if prime:
            pts.append(mask)
    return _point_masks_to_spectrum(lat, pts)


@dataclass(frozen=True)
class StoneUnitReport:
    ok: bool
    failures: tuple[str, ...] = ()

    def to_dict(self):
        return {"ok": self.ok, "failures": list(self.failures)}


def stone_unit_check(lat: DLat, spec: Spectrum | None = None) -> StoneUnitReport:
    """Verify a ↦ {P : a ∉ P} is a bounded-lattice isomorphism onto its image."""
    if spec is None:
        spec = prime_spectrum(lat)
    unit = spec.unit
    fails: list[str] = []
    if len(set(unit)) != lat.size:
        fails.append("unit not injective")
    els = lat.elements
    for i, x in enumerate(els):
        for j, y in enumerate(els):
            if (unit[i] | unit[j] == unit[j]) != DLat.leq(x, y):
                fails.append(f"order not reflected/preserved at ({lat.fmt(x)}, {lat.fmt(y)})")
                break
            if unit[lat.pos(x | y)] != unit[i] | unit[j]:
                fails.append(f"join not sent to union at ({lat.fmt(x)}, {lat.fmt(y)})")
                break
            if unit[lat.pos(x & y)] != unit[i] & unit[j]:
                fails.append(f"meet not sent to intersection at ({lat.fmt(x)}, {lat.fmt(y)})")
                break
        if fails:
            break
    if unit[lat.pos(lat.bottom)] != 0:
        fails.append("bottom not sent to empty set")
    if unit[lat.pos(lat.top)] != (1 << spec.n_points) - 1:
        fails.append("top not sent to full point set")
    return StoneUnitReport(not fails, tuple(fails))


def spectrum_matches_base(lat: DLat, spec: Spectrum | None = None) -> bool:
    """The spectrum order is isomorphic to the base poset via p ↦ I_p."""
    if spec is None:
        spec = prime_spectrum(lat)
    base = lat.base
    if spec.n_points != base.n:
        return False
    # reconstruct the bijection p -> point mask and compare orders
    pt_of = []
    for p in range(base.n):
        m = 0
        for pos, x in enumerate(lat.elements):
            if not (x >> p) & 1:
                m |= 1 << pos
        if m not in spec.points:
            return False
        pt_of.append(spec.points.index(m))
    if len(set(pt_of)) != base.n:
        return False
    for p in range(base.n):
        for q in range(base.n):
            if base.leq(p, q) != spec.point_leq(pt_of[p], pt_of[q]):
                return False
    return True


class CofinalityError(LatticeError):
    """A spectral preimage was the whole domain (map not cofinal)."""


@dataclass(frozen=True)
class SpecMapResult:
    """The dual map Spec(cod) -> Spec(dom) of a 0-lattice homomorphism.

    ``point_map[q]`` gives, for each point index of the codomain spectrum,
    the index of its preimage ideal in the domain spectrum.  When the
    homomorphism is surjective the dual map is verified injective and an
    order embedding.
    """

    dom_spectrum: Spectrum
    cod_spectrum: Spectrum
    point_map: tuple[int, ...]
    injective: bool
    order_embedding: bool


def spec_map(f) -> SpecMapResult:
    """Dual of a LatHom: Q ↦ f⁻¹[Q], with the preimages verified prime."""
    dom, cod = f.dom, f.cod
    sd = prime_spectrum(dom)
    sc = prime_spectrum(cod)
    dom_pts = {pt: k for k, pt in enumerate(sd.points)}
    mapping = []
    for q in range(sc.n_points):
        qmask = sc.points[q]
        pre = 0
        for pos, x in enumerate(dom.elements):
            fx = f(x)
            if (qmask >> cod.pos(fx)) & 1:
                pre |= 1 << pos
        if pre == (1 << dom.size) - 1:
            raise CofinalityError("f^{-1}[Q] is all of the domain; f is not cofinal")
        if pre not in dom_pts:
            raise LatticeError("preimage of a prime ideal is not prime")
        mapping.append(dom_pts[pre])
    inj = len(set(mapping)) == len(mapping)
    emb = all(sc.point_leq(i, j) == sd.point_leq(mapping[i], mapping[j])
              for i in range(sc.n_points) for j in range(sc.n_points))
    return SpecMapResult(sd, sc, tuple(mapping), inj, emb)
