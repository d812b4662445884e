import random

import pytest

from latspec.condensate import (AlmostConstantSurjection, Condensate,
                                IndexUniverse, MixedCondensateError,
                                cond_make, finite_stage_iso, stage_inclusion)
from latspec.homs import LatHom, dual_hom_of_poset_map
from latspec.order import LatticeError, Poset, chain_lattice


def eps_cond(universe=None):
    eps = LatHom(chain_lattice(3), chain_lattice(2), [0, 1, 1])
    return Condensate(eps, universe or IndexUniverse.countable())


def phi_cond(universe=None):
    phi = dual_hom_of_poset_map([0, 2], Poset.chain(2), Poset.chain(3))
    return Condensate(phi, universe or IndexUniverse.countable())


def test_cond_make():
    eps = LatHom(chain_lattice(3), chain_lattice(2), [0, 1, 1])
    cond = cond_make(eps, IndexUniverse.finite(["i"]))
    assert len(cond.stage(["i"])) == 6


def test_universe_kinds():
    fin = IndexUniverse.finite(["i", "j"])
    assert fin.admits("i") and not fin.admits("z")
    assert IndexUniverse.countable().admits("anything")
    assert IndexUniverse.uncountable().admits("xi0")
    with pytest.raises(LatticeError):
        IndexUniverse.finite(["i", "i"])


def test_normalization_drops_phi_values():
    cond = eps_cond()
    c3 = cond.phi.dom
    u = c3.elements[1]
    # phi(u) = 1 = top of the 2-chain, so a deviation of 1 at any index is
    # redundant and must be dropped
    assert cond.element(u, {"i": 1}).dev == ()
    assert cond.element(u, {"i": 0}).dev == (("i", 0),)
    # bottom never carries deviations equal to phi(0) = 0
    assert cond.element(0, {"i": 0}).dev == ()


def test_finite_stage_size_matches_product():
    cond = eps_cond()
    assert len(set(cond.stage(["i"]))) == 6  # 3 x 2
    assert len(set(cond.stage([]))) == 3     # constant families ~ A
    rep = finite_stage_iso(cond, ["i"])
    assert rep.ok and rep.stage_size == 6


def test_finite_universe_is_full_product():
    cond = eps_cond(IndexUniverse.finite(["i", "j"]))
    rep = finite_stage_iso(cond, ["i", "j"])
    assert rep.ok and rep.stage_size == 3 * 2 * 2
    with pytest.raises(LatticeError):
        cond.element(0, {"k": 0})  # index outside the finite universe


def test_pointwise_ops_frozen_examples():
    cond = eps_cond()
    c3 = cond.phi.dom
    u, top = c3.elements[1], c3.top
    s = cond.element(u, {"i": 0})
    # join with the all-top constant: phi(top) = 1 kills the deviation
    assert cond.join(cond.element(top), s) == cond.element(top)
    # meet((u, {i->0}), (u, {})) keeps the deviation since phi(u) = 1 > 0
    assert cond.meet(s, cond.element(u)) == s
    # join(s, bottom) = s, leq(bottom, anything)
    assert cond.join(s, cond.bottom) == s
    assert cond.leq(cond.bottom, s)
    assert not cond.leq(s, cond.bottom)
    assert cond.op("eq", s, s) and cond.op("leq", s, s)


def test_mixed_condensates_rejected():
    c1, c2 = eps_cond(), eps_cond()
    with pytest.raises(MixedCondensateError):
        c1.join(c1.bottom, c2.bottom)


def test_representative_independence():
    # building with redundant deviation entries lands on the same canonical
    # form, and operations agree regardless of how operands were presented
    rng = random.Random(5)
    cond = phi_cond()
    a, b = cond.phi.dom, cond.phi.cod
    names = ["i", "j", "k"]
    for _ in range(200):
        base = rng.choice(a.elements)
        fb = cond.phi(base)
        dev = {n: rng.choice(b.elements) for n in rng.sample(names, rng.randint(0, 3))}
        redundant = dict(dev)
        for n in names:
            if n not in redundant and rng.random() < 0.5:
                redundant[n] = fb  # no-op entry
        x = cond.element(base, dev)
        y = cond.element(base, redundant)
        assert x == y
        s = cond.element(rng.choice(a.elements), {rng.choice(names): rng.choice(b.elements)})
        assert cond.join(x, s) == cond.join(y, s)
        assert cond.meet(x, s) == cond.meet(y, s)


def test_distributivity_on_random_triples():
    rng = random.Random(17)
    cond = phi_cond()
    a, b = cond.phi.dom, cond.phi.cod
    names = ["i", "j"]

    def rand_elem():
        dev = {n: rng.choice(b.elements) for n in names if rng.random() < 0.7}
        return cond.element(rng.choice(a.elements), dev)

    for _ in range(150):
        x, y, z = rand_elem(), rand_elem(), rand_elem()
        assert cond.meet(x, cond.join(y, z)) == cond.join(cond.meet(x, y), cond.meet(x, z))
        assert cond.join(x, cond.meet(y, z)) == cond.meet(cond.join(x, y), cond.join(x, z))


def test_stage_inclusions():
    cond = eps_cond()
    assert stage_inclusion(cond, [], ["i"])
    assert stage_inclusion(cond, ["i"], ["i", "j"])
    with pytest.raises(LatticeError):
        stage_inclusion(cond, ["i"], ["j"])


def test_stage_iso_both_kernels_up_to_three():
    for cond in (eps_cond(), phi_cond()):
        for k in range(4):
            rep = finite_stage_iso(cond, [f"x{t}" for t in range(k)])
            assert rep.ok
            exp = cond.phi.dom.size * cond.phi.cod.size ** k
            assert rep.stage_size == exp


def test_almost_constant_surjection_values():
    phi = dual_hom_of_poset_map([0, 2], Poset.chain(2), Poset.chain(3))
    acs = AlmostConstantSurjection(phi, IndexUniverse.countable())
    c4 = phi.dom
    # constant family maps to constant family
    const = acs.source.element(c4.elements[2])
    assert acs.apply(const) == acs.target.element(c4.elements[2])
    # deviation 3 at one index: phi(3) = 2 while phi(2) = 1, entry kept
    s = acs.source.element(c4.elements[2], {"i": c4.top})
    img = acs.apply(s)
    assert img.base == c4.elements[2]
    assert img.dev == (("i", phi(c4.top)),)


def test_almost_constant_surjection_stages():
    # exhaustive up to three indices (the largest stage has 256 sources)
    phi = dual_hom_of_poset_map([0, 2], Poset.chain(2), Poset.chain(3))
    acs = AlmostConstantSurjection(phi, IndexUniverse.countable())
    for k in range(4):
        rep = acs.verify_stage([f"i{t}" for t in range(k)])
        assert rep.ok
        assert rep.source_size == 4 ** (k + 1)
        assert rep.target_size == 4 * 3 ** k
