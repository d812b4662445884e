"""Finite posets and bounded distributive lattices in canonical downset form.

Conventions used throughout the package:

- A ``Poset`` has elements ``0 .. n-1`` and stores its order relation as a
  tuple of upset bitmasks (``up[i]`` has bit ``j`` set iff ``i <= j``).
- A ``DLat`` is the lattice of *all* downsets of a base poset.  An element
  of a ``DLat`` is an ``int`` bitmask over the base elements; join is ``|``,
  meet is ``&``, order is bitmask inclusion.  Equality of elements is plain
  integer equality, which makes isomorphism and homomorphism checks cheap
  and deterministic.
- The canonical ordering of lattice elements is by ``(popcount, mask)``.
  This is a linear extension of the lattice order, so "first in canonical
  order" refines "minimal in the lattice order".
- ``RawLattice`` is an untrusted lattice given by join/meet tables; it is
  the input format for canonicalization via join-irreducibles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


class LatticeError(Exception):
    """Base class for structural errors in this package."""


class CycleError(LatticeError):
    """Raised when an alleged order relation contains a cycle.

    Cyclic input is rejected rather than quotiented: silently collapsing
    strongly connected components would mask user errors.
    """

    def __init__(self, a, b):
        self.cycle = (a, b)
        super().__init__(f"order cycle: {a} <= {b} and {b} <= {a}")


class NotALatticeError(LatticeError):
    def __init__(self, reason, witness=None):
        self.witness = witness
        super().__init__(reason if witness is None else f"{reason}: {witness}")


class NotDistributiveError(LatticeError):
    """Carries a witness triple (a, b, c) with a∧(b∨c) != (a∧b)∨(a∧c)."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not distributive at triple {witness}")


def popcount(x: int) -> int:
    return x.bit_count()


def bits(mask: int) -> Iterable[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def canon_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


class Poset:
    """An immutable finite partial order on ``0 .. n-1``."""

    __slots__ = ("n", "up", "down", "labels")

    def __init__(self, n: int, up: Sequence[int], labels: Sequence[str] | None = None):
        up = tuple(up)
        if len(up) != n:
            raise LatticeError("up-mask table has wrong length")
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise LatticeError("up-mask references element out of range")
            if not (up[i] >> i) & 1:
                raise LatticeError(f"relation not reflexive at {i}")
        for i in range(n):
            for j in bits(up[i]):
                if i != j and (up[j] >> i) & 1:
                    raise CycleError(i, j)
                if up[j] & ~up[i]:
                    raise LatticeError(f"relation not transitive at ({i}, {j})")
        self.n = n
        self.up = up
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise LatticeError("labels must be distinct, one per element")
        self.labels = labels

    # -- constructors -------------------------------------------------

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> "Poset":
        """Reflexive-transitive closure of arbitrary (a <= b) pairs.

        Cycles raise ``CycleError`` instead of being collapsed.
        """
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise LatticeError(f"pair ({a}, {b}) out of range")
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in bits(up[i]):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        return cls(n, up, labels)

    @classmethod
    def chain(cls, n: int, labels: Sequence[str] | None = None) -> "Poset":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)], labels)

    @classmethod
    def antichain(cls, n: int, labels: Sequence[str] | None = None) -> "Poset":
        return cls.from_pairs(n, [], labels)

    @classmethod
    def disjoint_union(cls, posets: Sequence["Poset"]) -> "Poset":
        n = sum(p.n for p in posets)
        ups: list[int] = []
        labels: list[str] = []
        offset = 0
        for k, p in enumerate(posets):
            ups.extend(u << offset for u in p.up)
            labels.extend(f"{k}.{lab}" for lab in p.labels)
            offset += p.n
        return cls(n, ups, labels)

    # -- queries ------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (i, j) with j covering i."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if between == 0:
                    out.append((i, j))
        return out

    def is_downset(self, mask: int) -> bool:
        for j in bits(mask):
            if self.down[j] & ~mask:
                return False
        return True

    def downsets(self) -> tuple[int, ...]:
        """All downsets, sorted by canonical key."""
        if self.n > 20:
            raise LatticeError(f"downset enumeration over {self.n} elements refused")
        out = [m for m in range(1 << self.n) if self.is_downset(m)]
        out.sort(key=canon_key)
        return tuple(out)

    def isomorphic_to(self, other: "Poset") -> bool:
        """Brute-force isomorphism test (intended for small posets)."""
        from itertools import permutations
        if self.n != other.n:
            return False
        if sorted(map(popcount, self.up)) != sorted(map(popcount, other.up)):
            return False
        for perm in permutations(range(self.n)):
            if all(self.leq(i, j) == other.leq(perm[i], perm[j])
                   for i in range(self.n) for j in range(self.n)):
                return True
        return False

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __hash__(self):
        return hash((self.n, self.up))


class DLat:
    """The bounded distributive lattice of all downsets of a base poset."""

    __slots__ = ("base", "elements", "_pos")

    def __init__(self, base: Poset):
        self.base = base
        self.elements = base.downsets()
        self._pos = {m: k for k, m in enumerate(self.elements)}
        # distributivity is automatic for downsets; assert it by sampling
        # anyway, so a corrupted element table cannot slip through silently
        self.assert_distributive_sample(triples=32)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return (1 << self.base.n) - 1

    def __contains__(self, mask: int) -> bool:
        return mask in self._pos

    def pos(self, mask: int) -> int:
        """Position of an element in the canonical enumeration."""
        return self._pos[mask]

    def check_member(self, mask: int) -> int:
        if mask not in self._pos:
            raise LatticeError(f"{mask:#x} is not an element (not a downset of the base)")
        return mask

    @staticmethod
    def join(x: int, y: int) -> int:
        return x | y

    @staticmethod
    def meet(x: int, y: int) -> int:
        return x & y

    @staticmethod
    def leq(x: int, y: int) -> bool:
        return x | y == y

    def fmt(self, mask: int) -> str:
        names = [self.base.labels[i] for i in bits(mask)]
        return "{" + ",".join(names) + "}"

    def assert_distributive_sample(self, triples: int = 200, seed: int = 0) -> None:
        """Spot-check distributivity (automatic for downsets, asserted anyway)."""
        import random
        rng = random.Random(seed)
        els = self.elements
        for _ in range(triples):
            a, b, c = (rng.choice(els) for _ in range(3))
            if a & (b | c) != (a & b) | (a & c):
                raise NotDistributiveError((a, b, c))

    def __repr__(self):
        return f"DLat(size={self.size}, base_n={self.base.n})"

    def __eq__(self, other):
        return isinstance(other, DLat) and self.base == other.base

    def __hash__(self):
        return hash(self.base)


def downset_lattice(p: Poset) -> DLat:
    """Birkhoff inverse: the lattice of all downsets of ``p``."""
    return DLat(p)


def chain_lattice(n: int) -> DLat:
    """The n-element chain as a DLat (downsets of an (n-1)-chain poset)."""
    if n < 1:
        raise LatticeError("chain must have at least one element")
    return DLat(Poset.chain(n - 1))


def chain_product(sizes: Sequence[int]) -> tuple[DLat, Callable[[Sequence[int]], int], Callable[[int], tuple[int, ...]]]:
    """Product of chains as a DLat, with tuple<->mask converters.

    The base poset is the disjoint union of the factors' chain posets; the
    element (v_1, .., v_k) corresponds to the downset whose slice in factor
    t is the first v_t base elements of that chain.
    """
    for s in sizes:
        if s < 1:
            raise LatticeError("chain factors must be nonempty")
    base = Poset.disjoint_union([Poset.chain(s - 1) for s in sizes])
    lat = DLat(base)
    offsets = []
    off = 0
    for s in sizes:
        offsets.append(off)
        off += s - 1

    def to_mask(vals: Sequence[int]) -> int:
        if len(vals) != len(sizes):
            raise LatticeError("coordinate tuple has wrong length")
        m = 0
        for t, v in enumerate(vals):
            if not 0 <= v < sizes[t]:
                raise LatticeError(f"coordinate {v} out of range for factor {t}")
            m |= ((1 << v) - 1) << offsets[t]
        return m

    def to_tuple(mask: int) -> tuple[int, ...]:
        out = []
        for t, s in enumerate(sizes):
            out.append(popcount((mask >> offsets[t]) & ((1 << (s - 1)) - 1)))
        return tuple(out)

    return lat, to_mask, to_tuple


@dataclass(frozen=True)
class RawLattice:
    """A finite bounded lattice given by explicit join/meet tables.

    This is the untrusted input side of canonicalization: ``validate``
    checks the lattice axioms, ``birkhoff_poset`` extracts the poset of
    join-irreducibles (rejecting non-distributive input with a witness).
    """

    n: int
    joins: tuple[tuple[int, ...], ...]
    meets: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @classmethod
    def from_dlat(cls, lat: DLat) -> "RawLattice":
        els = lat.elements
        pos = {m: k for k, m in enumerate(els)}
        joins = tuple(tuple(pos[x | y] for y in els) for x in els)
        meets = tuple(tuple(pos[x & y] for y in els) for x in els)
        labels = tuple(lat.fmt(m) for m in els)
        return cls(len(els), joins, meets, labels)

    @classmethod
    def from_order(cls, n: int, leq: Callable[[int, int], bool],
                   labels: Sequence[str] | None = None) -> "RawLattice":
        """Build tables from an order relation; fails if lubs/glbs are missing."""
        joins = []
        meets = []
        for a in range(n):
            jrow = []
            mrow = []
            for b in range(n):
                ub = [c for c in range(n) if leq(a, c) and leq(b, c)]
                least = [c for c in ub if all(leq(c, d) for d in ub)]
                if len(least) != 1:
                    raise NotALatticeError("no least upper bound", (a, b))
                jrow.append(least[0])
                lb = [c for c in range(n) if leq(c, a) and leq(c, b)]
                greatest = [c for c in lb if all(leq(d, c) for d in lb)]
                if len(greatest) != 1:
                    raise NotALatticeError("no greatest lower bound", (a, b))
                mrow.append(greatest[0])
            joins.append(tuple(jrow))
            meets.append(tuple(mrow))
        return cls(n, tuple(joins), tuple(meets),
                   tuple(labels) if labels is not None else None)

    def name(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def leq(self, a: int, b: int) -> bool:
        return self.joins[a][b] == b

    def validate(self) -> None:
        n = self.n
        if n == 0:
            raise NotALatticeError("empty carrier")
        J, M = self.joins, self.meets
        if len(J) != n or len(M) != n or any(len(r) != n for r in J) or any(len(r) != n for r in M):
            raise NotALatticeError("tables are not n x n")
        for r in J + M:
            for v in r:
                if not 0 <= v < n:
                    raise NotALatticeError("table entry out of range", v)
        for a in range(n):
            if J[a][a] != a or M[a][a] != a:
                raise NotALatticeError("operation not idempotent", a)
            for b in range(n):
                if J[a][b] != J[b][a]:
                    raise NotALatticeError("join not commutative", (a, b))
                if M[a][b] != M[b][a]:
                    raise NotALatticeError("meet not commutative", (a, b))
                if J[a][M[a][b]] != a or M[a][J[a][b]] != a:
                    raise NotALatticeError("absorption fails", (a, b))
                for c in range(n):
                    if J[J[a][b]][c] != J[a][J[b][c]]:
                        raise NotALatticeError("join not associative", (a, b, c))
                    if M[M[a][b]][c] != M[a][M[b][c]]:
                        raise NotALatticeError("meet not associative", (a, b, c))

    def check_distributive(self) -> None:
        J, M = self.joins, self.meets
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
                        raise NotDistributiveError((a, b, c))

    @property
    def bottom(self) -> int:
        cand = 0
        for a in range(1, self.n):
            if self.leq(a, cand):
                cand = a
        if not all(self.leq(cand, a) for a in range(self.n)):
            raise NotALatticeError("no bottom element")
        return cand

    @property
    def top(self) -> int:
        cand = 0
        for a in range(1, self.n):
            if self.leq(cand, a):
                cand = a
        if not all(self.leq(a, cand) for a in range(self.n)):
            raise NotALatticeError("no top element")
        return cand

    def join_irreducibles(self) -> list[int]:
        """Elements a != 0 that are not the join of their strict lower set."""
        bot = self.bottom
        out = []
        for a in range(self.n):
            if a == bot:
                continue
            acc = bot
            for x in range(self.n):
                if x != a and self.leq(x, a):
                    acc = self.joins[acc][x]
            if acc != a:
                out.append(a)
        return out


def birkhoff_poset(raw: RawLattice) -> Poset:
    """The induced order on the join-irreducibles of a distributive lattice.

    Validates the tables and distributivity first; either failure raises
    (``NotDistributiveError`` carries the witness triple).
    """
    raw.validate()
    raw.check_distributive()
    irr = raw.join_irreducibles()
    pairs = [(i, j) for i, a in enumerate(irr) for j, b in enumerate(irr)
             if raw.leq(a, b)]
    return Poset.from_pairs(len(irr), pairs, [raw.name(a) for a in irr])


def birkhoff_iso(raw: RawLattice) -> tuple[Poset, DLat, list[int]]:
    """Full verified round trip raw -> join-irreducible poset -> downsets.

    Returns ``(poset, lattice, iso)`` where ``iso[a]`` is the downset mask
    corresponding to raw element ``a``.  The isomorphism is verified
    element-wise: bijective, and preserving join and meet on all pairs.
    """
    raw.validate()
    raw.check_distributive()
    irr = raw.join_irreducibles()
    pairs = [(i, j) for i, a in enumerate(irr) for j, b in enumerate(irr)
             if raw.leq(a, b)]
    poset = Poset.from_pairs(len(irr), pairs, [raw.name(a) for a in irr])
    lat = DLat(poset)
    iso = []
    for a in range(raw.n):
        m = 0
        for k, j in enumerate(irr):
            if raw.leq(j, a):
                m |= 1 << k
        iso.append(m)
    if len(set(iso)) != raw.n:
        raise NotALatticeError("join-irreducible map is not injective")
    if set(iso) != set(lat.elements):
        raise NotALatticeError("join-irreducible map is not onto the downsets")
    for a in range(raw.n):
        for b in range(raw.n):
            if iso[raw.joins[a][b]] != iso[a] | iso[b]:
                raise NotALatticeError("iso fails to preserve join", (a, b))
            if iso[raw.meets[a][b]] != iso[a] & iso[b]:
                raise NotALatticeError("iso fails to preserve meet", (a, b))
    return poset, lat, iso
