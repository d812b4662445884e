"""Exact integer piecewise-linear functions on the closed quadrant.

A ``PLFun`` is a positively homogeneous continuous function on
Ω = {(x, y) : x ≥ 0, y ≥ 0}, stored as a rational fan: an angularly sorted
list of primitive integer rays from (1,0) to (0,1), with one integer linear
functional (m, n) ↦ mx + ny per cone between consecutive rays.  The group
generated by the two coordinate projections under +, -, ∨, ∧ consists of
exactly these functions, so all lattice-group operations stay exact.

All coefficients are Python ints, hence arbitrary precision by
construction; there is no overflow path to detect.

Canonical form: adjacent cones never carry equal functionals, and adjacent
functionals agree on the shared ray (continuity).  Canonical forms are
unique, so function equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Vec = tuple[int, int]

RAY_X: Vec = (1, 0)
RAY_Y: Vec = (0, 1)


class PLError(ValueError):
    pass


def _cross(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _dot(c: Vec, r) -> int:
    return c[0] * r[0] + c[1] * r[1]


def _primitive(x: int, y: int) -> Vec:
    if x < 0 or y < 0 or (x == 0 and y == 0):
        raise PLError(f"({x}, {y}) is not a direction in the closed quadrant")
    g = gcd(x, y)
    return (x // g, y // g)


def _merge_rays(*ray_lists: Sequence[Vec]) -> tuple[Vec, ...]:
    rays = set()
    for rl in ray_lists:
        rays.update(rl)
    return tuple(sorted(rays, key=_angle_key))


def _angle_key(r: Vec) -> Fraction:
    # monotone in angle on the closed quadrant: y/(x+y) ∈ [0, 1]
    return Fraction(r[1], r[0] + r[1])


class PLFun:
    """Canonical-form integer PL function on the quadrant."""

    __slots__ = ("rays", "coeffs")

    def __init__(self, rays: Sequence[Vec], coeffs: Sequence[Vec]):
        rays = tuple((int(x), int(y)) for x, y in rays)
        coeffs = tuple((int(m), int(n)) for m, n in coeffs)
        if len(rays) < 2 or rays[0] != RAY_X or rays[-1] != RAY_Y:
            raise PLError("fan must start at (1,0) and end at (0,1)")
        if len(coeffs) != len(rays) - 1:
            raise PLError("need exactly one functional per cone")
        for x, y in rays:
            if x < 0 or y < 0 or (x, y) != _primitive(x, y):
                raise PLError(f"ray ({x}, {y}) is not primitive in the quadrant")
        for k in range(len(rays) - 1):
            if _cross(rays[k], rays[k + 1]) <= 0:
                raise PLError("rays must be strictly sorted by angle")
        for k in range(len(coeffs) - 1):
            if _dot(coeffs[k], rays[k + 1]) != _dot(coeffs[k + 1], rays[k + 1]):
                raise PLError(f"discontinuity at ray {rays[k + 1]}")
            if coeffs[k] == coeffs[k + 1]:
                raise PLError(f"fan not canonical: redundant ray {rays[k + 1]}")
        self.rays = rays
        self.coeffs = coeffs

    def __eq__(self, other):
        # canonical forms are unique, so this is value equality
        return (isinstance(other, PLFun) and self.rays == other.rays
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.rays, self.coeffs))

    def __repr__(self):
        return f"PLFun(rays={self.rays}, coeffs={self.coeffs})"

    # -- construction ---------------------------------------------------

    @classmethod
    def from_pieces(cls, rays: Sequence[Vec], coeffs: Sequence[Vec]) -> "PLFun":
        """Build from a (possibly redundant) fan, merging equal neighbours."""
        out_rays = [tuple(rays[0])]
        out_coeffs = [tuple(coeffs[0])]
        for k in range(1, len(coeffs)):
            c = tuple(coeffs[k])
            if c == out_coeffs[-1]:
                continue
            out_rays.append(tuple(rays[k]))
            out_coeffs.append(c)
        out_rays.append(tuple(rays[-1]))
        return cls(out_rays, out_coeffs)

    @classmethod
    def linear(cls, m: int, n: int) -> "PLFun":
        return cls((RAY_X, RAY_Y), ((m, n),))

    @classmethod
    def zero(cls) -> "PLFun":
        return cls.linear(0, 0)


def pl_generators() -> tuple[PLFun, PLFun]:
    """The coordinate projections a: (x,y) ↦ x and b: (x,y) ↦ y."""
    return PLFun.linear(1, 0), PLFun.linear(0, 1)


def _coeffs_on(f: PLFun, rays: Sequence[Vec]) -> list[Vec]:
    """Per-cone functionals of f on a fan refining f's own."""
    out = []
    fi = 0
    last = len(f.coeffs) - 1
    for k in range(len(rays) - 1):
        while fi < last and _cross(f.rays[fi + 1], rays[k]) >= 0:
            fi += 1
        out.append(f.coeffs[fi])
    return out


def refine(f: PLFun, g: PLFun) -> tuple[tuple[Vec, ...], list[Vec], list[Vec]]:
    """Common fan of f and g with both coefficient lists."""
    rays = _merge_rays(f.rays, g.rays)
    return rays, _coeffs_on(f, rays), _coeffs_on(g, rays)


def common_refinement(fs: Sequence[PLFun]) -> tuple[tuple[Vec, ...], list[list[Vec]]]:
    """Common fan of any number of functions with their coefficient lists."""
    rays = _merge_rays(*(f.rays for f in fs))
    return rays, [_coeffs_on(f, rays) for f in fs]


def pl_add(f: PLFun, g: PLFun) -> PLFun:
    rays, cf, cg = refine(f, g)
    return PLFun.from_pieces(rays, [(a[0] + b[0], a[1] + b[1]) for a, b in zip(cf, cg)])


def pl_neg(f: PLFun) -> PLFun:
    return PLFun(f.rays, tuple((-m, -n) for m, n in f.coeffs))


def pl_sub(f: PLFun, g: PLFun) -> PLFun:
    return pl_add(f, pl_neg(g))


def pl_scale(k: int, f: PLFun) -> PLFun:
    if k == 0:
        return PLFun.zero()
    return PLFun(f.rays, tuple((k * m, k * n) for m, n in f.coeffs)) if k > 0 \
        else pl_neg(pl_scale(-k, f))


def _crossing_ray(df: Vec, left: Vec, right: Vec) -> Vec:
    """Primitive ray strictly inside cone(left, right) where df vanishes."""
    for cand in ((df[1], -df[0]), (-df[1], df[0])):
        if _cross(left, cand) > 0 and _cross(cand, right) > 0:
            return _primitive(cand[0], cand[1])
    raise PLError("no crossing ray inside the cone")  # pragma: no cover


def pl_join(f: PLFun, g: PLFun) -> PLFun:
    """Pointwise maximum: refine, split cones where f - g changes sign."""
    rays, cf, cg = refine(f, g)
    extra = []
    for k in range(len(rays) - 1):
        df = (cf[k][0] - cg[k][0], cf[k][1] - cg[k][1])
        s1, s2 = _dot(df, rays[k]), _dot(df, rays[k + 1])
        if (s1 > 0 > s2) or (s1 < 0 < s2):
            extra.append(_crossing_ray(df, rays[k], rays[k + 1]))
    if extra:
        rays = _merge_rays(rays, extra)
        cf, cg = _coeffs_on(f, rays), _coeffs_on(g, rays)
    out = []
    for k in range(len(rays) - 1):
        df = (cf[k][0] - cg[k][0], cf[k][1] - cg[k][1])
        take_f = _dot(df, rays[k]) >= 0 and _dot(df, rays[k + 1]) >= 0
        out.append(cf[k] if take_f else cg[k])
    return PLFun.from_pieces(rays, out)


def pl_meet(f: PLFun, g: PLFun) -> PLFun:
    return pl_neg(pl_join(pl_neg(f), pl_neg(g)))


def pl_pos(f: PLFun) -> PLFun:
    return pl_join(f, PLFun.zero())


def pl_negpart(f: PLFun) -> PLFun:
    return pl_pos(pl_neg(f))


def pl_abs(f: PLFun) -> PLFun:
    return pl_join(f, pl_neg(f))


def pl_diff(f: PLFun, g: PLFun) -> PLFun:
    """The truncated difference (f - g) ∨ 0."""
    return pl_pos(pl_sub(f, g))


def pl_eval(f: PLFun, x, y):
    """Value at a rational point of the closed quadrant."""
    x, y = Fraction(x), Fraction(y)
    if x < 0 or y < 0:
        raise PLError(f"point ({x}, {y}) outside the closed quadrant")
    p = (x, y)
    for k in range(len(f.rays) - 1):
        if _cross_frac(f.rays[k], p) >= 0 and _cross_frac(p, f.rays[k + 1]) >= 0:
            m, n = f.coeffs[k]
            v = m * x + n * y
            return int(v) if v.denominator == 1 else v
    raise PLError("point not located in any cone")  # pragma: no cover


def _cross_frac(a, b):
    return a[0] * b[1] - a[1] * b[0]


def ray_values(f: PLFun) -> tuple[int, ...]:
    """f evaluated at each fan ray (continuity makes the cone choice moot)."""
    vals = [_dot(f.coeffs[0], f.rays[0])]
    for k in range(len(f.coeffs)):
        vals.append(_dot(f.coeffs[k], f.rays[k + 1]))
    return tuple(vals)


def pl_geq_zero(f: PLFun) -> bool:
    """f ≥ 0 pointwise iff f ≥ 0 at every ray of its canonical fan."""
    return all(v >= 0 for v in ray_values(f))


def pl_leq(f: PLFun, g: PLFun) -> bool:
    return pl_geq_zero(pl_sub(g, f))


def pl_eq(f: PLFun, g: PLFun) -> bool:
    return f.rays == g.rays and f.coeffs == g.coeffs


def pl_is_zero(f: PLFun) -> bool:
    return f.coeffs == ((0, 0),)


def pl_combine(op: str, f: PLFun, g: PLFun | None = None) -> PLFun:
    """Name-dispatched operation (unary ops ignore g)."""
    unary = {"neg": pl_neg, "abs": pl_abs, "pos": pl_pos, "negpart": pl_negpart}
    binary = {"add": pl_add, "sub": pl_sub, "join": pl_join,
              "meet": pl_meet, "diff": pl_diff}
    if op in unary:
        return unary[op](f)
    if op in binary:
        if g is None:
            raise PLError(f"operation {op!r} needs two operands")
        return binary[op](f, g)
    raise PLError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class IdealLeq:
    """Result of the principal-ideal containment test ⟨x⟩ ⊆ ⟨y⟩.

    When it holds, ``bound`` is the least n with |x| ≤ n·|y|.  When it
    fails, ``witness`` is a ray direction with |y| = 0 < |x|.
    """

    holds: bool
    bound: int | None = None
    witness: Vec | None = None

    def to_dict(self):
        return {"holds": self.holds, "bound": self.bound,
                "witness": list(self.witness) if self.witness else None}


def pl_ideal_leq(x: PLFun, y: PLFun) -> IdealLeq:
    """Decide ∃n: |x| ≤ n·|y| on the common refinement, ray by ray.

    A degree-1 homogeneous functional on a two-dimensional cone is
    dominated iff it is dominated at the two extreme rays, so checking all
    rays of the refined fan decides pointwise dominance exactly.
    """
    fx, fy = pl_abs(x), pl_abs(y)
    rays, cx, cy = refine(fx, fy)
    best = 0
    for k, r in enumerate(rays):
        cxk = cx[min(k, len(cx) - 1)]
        cyk = cy[min(k, len(cy) - 1)]
        vx, vy = _dot(cxk, r), _dot(cyk, r)
        if vy == 0:
            if vx > 0:
                return IdealLeq(False, witness=r)
        else:
            best = max(best, -(-vx // vy))  # ceil division
    return IdealLeq(True, bound=best)


def pl_ideal_eq(x: PLFun, y: PLFun) -> bool:
    return pl_ideal_leq(x, y).holds and pl_ideal_leq(y, x).holds


def support_ray_profile(f: PLFun) -> tuple[tuple[bool, ...], tuple[bool, ...]]:
    """(nonzero at each |f|-fan ray, nonzero on each open cone)."""
    g = pl_abs(f)
    rv = ray_values(g)
    return tuple(v > 0 for v in rv), tuple(c != (0, 0) for c in g.coeffs)


def support_connected(f: PLFun) -> bool:
    """Is {p ∈ Ω : f(p) ≠ 0} connected?

    The support of |f| is a union of open cones and rays of its canonical
    fan; within the quadrant's angular interval it is connected iff the
    marked slots form a single run.  An empty support counts as connected.
    """
    ray_on, cone_on = support_ray_profile(f)
    slots: list[bool] = []
    for k, r in enumerate(ray_on):
        slots.append(r)
        if k < len(cone_on):
            slots.append(cone_on[k])
    runs = 0
    prev = False
    for s in slots:
        if s and not prev:
            runs += 1
        prev = s
    return runs <= 1


def pl_way_below(x: PLFun, y: PLFun) -> bool:
    """k·x ≤ y for every k ≥ 1; by homogeneity this forces x = 0."""
    if not (pl_geq_zero(x) and pl_geq_zero(y)):
        raise PLError("way-below is defined for nonnegative elements only")
    return pl_is_zero(x)
