import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from descentcoh import algebra as alg
from descentcoh import descent as ds
from descentcoh import factorization as fz
from descentcoh import nonabelian as na
from descentcoh.errors import AxiomViolated, DomainMismatch, IndexOutOfRange, NotACocycle, NotAGroup


def _inversion(n):
    return na.validate_action(alg.cyclic_group(2), alg.cyclic_group(n),
                              [list(range(n)), [(-i) % n for i in range(n)]])


def _automorphism_actions(n):
    # Z/k acting on Z/n by multiplication with a unit u of order dividing k
    out = []
    for u in range(1, n):
        if np.gcd(u, n) != 1:
            continue
        k = next(k for k in range(1, n + 1) if pow(u, k, n) == 1)
        star = [[(pow(u, e, n) * b) % n for b in range(n)] for e in range(k)]
        out.append(na.validate_action(alg.cyclic_group(k), alg.cyclic_group(n), star))
    return out


def _conjugation_on_a3():
    s3 = alg.symmetric_group(3)
    return fz.conjugation_action(s3, alg.alternating_subgroup(s3), alg.subgroup_generated(s3, [2])).action


ACTIONS = {
    "inv3": lambda: _inversion(3),
    "inv4": lambda: _inversion(4),
    "inv5": lambda: _inversion(5),
    "triv22": lambda: na.trivial_action(alg.cyclic_group(2), alg.cyclic_group(2)),
    "triv23": lambda: na.trivial_action(alg.cyclic_group(2), alg.cyclic_group(3)),
    "triv32": lambda: na.trivial_action(alg.cyclic_group(3), alg.cyclic_group(2)),
    "z2_on_s3": lambda: _conjugation_on_a3(),
    "mult7": lambda: _automorphism_actions(7)[2],
}
GROUP_ACTIONS = sorted(ACTIONS)


# --- actions ----------------------------------------------------------------------

def test_validate_action_examples():
    z2 = alg.cyclic_group(2)
    z3 = alg.cyclic_group(3)
    act = _inversion(3)
    assert act.star.tolist() == [[0, 1, 2], [0, 2, 1]]
    with pytest.raises(AxiomViolated) as exc:
        na.validate_action(z2, z3, [[0, 1, 2], [1, 2, 0]])  # b |-> b + 1
    assert exc.value.axiom == "iii"
    with pytest.raises(AxiomViolated) as exc:
        na.validate_action(z2, z3, [[1, 2, 0], [0, 1, 2]])
    assert exc.value.axiom == "i"
    z4 = alg.cyclic_group(4)
    with pytest.raises(AxiomViolated) as exc:
        # the generator acts by an involution, so its square cannot act by one
        na.validate_action(z4, z3, [[0, 1, 2], [0, 2, 1], [0, 2, 1], [0, 1, 2]])
    assert exc.value.axiom == "ii"
    with pytest.raises(AxiomViolated) as exc:
        na.validate_action(z2, z4, [[0, 1, 2, 3], [0, 2, 1, 3]])  # an involution, not additive
    assert exc.value.axiom == "iv"
    with pytest.raises(IndexOutOfRange):
        na.validate_action(z2, z3, [[0, 1, 2]])
    with pytest.raises(IndexOutOfRange):
        na.validate_action(z2, z3, [[0, 1, 2], [0, 1, 3]])


@pytest.mark.parametrize("n", [5, 7, 8, 9])
def test_multiplication_actions_are_actions(n):
    for act in _automorphism_actions(n):
        assert na.action_violation(act.actor, act.target, act.star) is None


def test_opposite_action_is_involutive_and_valid():
    act = ACTIONS["z2_on_s3"]()
    op = na.opposite_action(act)
    assert op.opposite is act and na.opposite_action(op) is act
    assert (op.target.table == act.target.table.T).all()
    assert na.action_violation(op.actor, op.target, op.star) is None


# --- semidirect products -----------------------------------------------------------

def test_semidirect_inversion_is_s3():
    prod = na.semidirect(_inversion(3))
    g = prod.algebra
    assert g.is_group and g.order == 6 and not alg.is_commutative(g)
    assert alg.find_isomorphism(g, alg.symmetric_group(3)) is not None
    assert na.semidirect(_inversion(3)) is not prod  # distinct actions, distinct products
    act = _inversion(3)
    assert na.semidirect(act) is na.semidirect(act)


def test_semidirect_of_trivial_action_is_direct_product():
    prod = na.semidirect(na.trivial_action(alg.cyclic_group(2), alg.cyclic_group(3)))
    assert alg.find_isomorphism(prod.algebra, alg.cyclic_group(6)) is not None


def test_semidirect_monoid_case():
    sl = alg.semilattice()
    act = na.validate_action(sl, alg.cyclic_group(2), [[0, 1], [0, 0]])
    prod = na.semidirect(act)
    m = prod.algebra
    assert not m.is_group and m.order == 4
    alg.validate_monoid(m.order, m.table, m.identity)
    for hom in (prod.iota_b, prod.iota_x, prod.p_x):
        assert alg.check_homomorphism(hom)
    assert ds.is_left_cocycle(prod.iota_b, prod.p_b)


@pytest.mark.parametrize("name", GROUP_ACTIONS)
def test_semidirect_structure_maps(name):
    act = ACTIONS[name]()
    prod = na.semidirect(act)
    g = prod.algebra
    alg.validate_monoid(g.order, g.table, g.identity)
    assert (g.table[np.arange(g.order), g.inverse] == g.identity).all()
    for hom in (prod.iota_b, prod.iota_x, prod.p_x):
        assert alg.check_homomorphism(hom)
    assert alg.is_normal(g, prod.iota_b.image())
    assert fz.is_complement(g, prod.iota_b.image(), prod.iota_x.image())
    assert ds.is_left_cocycle(prod.iota_b, prod.p_b)


# --- Serre cohomology --------------------------------------------------------------

@pytest.mark.parametrize("name", GROUP_ACTIONS)
def test_z1_matches_all_maps_oracle(name):
    act = ACTIONS[name]()
    x, b = act.actor, act.target
    expected = oracles.serre_cocycles_all_maps(oracles.table_of(x), oracles.table_of(b),
                                              x.identity, b.identity, act.star.tolist())
    zs = na.z1_serre(act)
    assert sorted(s.q.as_tuple() for s in zs) == sorted(expected)
    assert zs[0].q.same(na.zero_cocycle(act).q)
    assert all(na.is_serre_cocycle(act, s.q) for s in zs)


def test_serre_checker_witnesses():
    act = _inversion(3)
    z2, z3 = act.actor, act.target
    v = na.is_serre_cocycle(act, alg.ElementMap(z2, z3, [1, 0]))
    assert not v and v.condition == "unit"
    v = na.is_serre_cocycle(act, alg.ElementMap(z2, z3, [0, 0]))
    assert v
    v = na.is_serre_cocycle(na.trivial_action(z2, z3), alg.ElementMap(z2, z3, [0, 1]))
    assert not v and v.condition == "cocycle"
    with pytest.raises(DomainMismatch):
        na.is_serre_cocycle(act, alg.ElementMap(z3, z3, [0, 0, 0]))


def test_h1_h0_examples():
    act = _inversion(3)
    assert len(na.z1_serre(act)) == 3 and len(na.h1(act)) == 1
    assert na.h0(act).elements.tolist() == [0]
    triv = na.trivial_action(alg.cyclic_group(2), alg.cyclic_group(2))
    h = na.h1(triv)
    assert len(h) == 2 and h.base_class == 0
    assert na.h0(triv).order == 2
    # inversion on Z/4: H^1 = Z/4[2] / 2 Z/4 has two elements
    assert len(na.h1(_inversion(4))) == 2


@pytest.mark.parametrize("name", GROUP_ACTIONS)
def test_h1_matches_pairwise_oracle(name):
    act = ACTIONS[name]()
    b, star = act.target, act.star
    h = na.h1(act)
    qs = [s.q.as_tuple() for s in h.cocycles]
    n = oracles.count_classes(qs, lambda q, r: any(
        all(b.table[q[x], star[x][b0]] == b.table[b0, r[x]] for x in range(act.actor.order))
        for b0 in range(b.order)))
    assert len(h) == n
    for i in range(len(qs)):
        for j in range(len(qs)):
            same = h.class_of(i) == h.class_of(j)
            assert (na.serre_equivalent(h.cocycles[i], h.cocycles[j]) is not None) == same


@given(st.sampled_from(GROUP_ACTIONS), st.integers(0, 100), st.integers(0, 100))
def test_serre_twist_preserves_cocycles(name, i, b0):
    act = ACTIONS[name]()
    zs = na.z1_serre(act)
    s = zs[i % len(zs)]
    t = na.serre_twist(s, b0 % act.target.order)
    assert na.is_serre_cocycle(act, t.q)
    assert na.serre_equivalent(s, t) is not None


# --- translations ------------------------------------------------------------------

@pytest.mark.parametrize("name", GROUP_ACTIONS)
def test_translation_roundtrip(name):
    act = ACTIONS[name]()
    prod = na.semidirect(act)
    op = na.opposite_action(act)
    cs = ds.enumerate_left_cocycles(prod.iota_b)
    zs = na.z1_serre(op)
    assert len(cs) == len(zs)
    for c in cs:
        s = na.desc_to_serre(act, c)
        assert na.is_serre_cocycle(op, s.q)
        assert na.serre_to_desc(act, s).q.same(c.q)
    for s in zs:
        assert na.desc_to_serre(act, na.serre_to_desc(act, s)).q.same(s.q)
    assert na.desc_to_serre(act, ds.DescentCocycle(prod.iota_b, prod.p_b)).q.same(na.zero_cocycle(op).q)


@pytest.mark.parametrize("name", GROUP_ACTIONS)
def test_desc_and_serre_classes_agree(name):
    act = ACTIONS[name]()
    prod = na.semidirect(act)
    base = ds.DescentCocycle(prod.iota_b, prod.p_b)
    d = ds.desc1(prod.iota_b, base=base)
    assert na.translation_is_bijective(act)
    assert len(d) == len(na.h1(na.opposite_action(act))) == len(na.h1(act))
    assert ds.desc0(base).members == na.h0(na.opposite_action(act)).members
    assert len(fz.b_orbits_of_complements(prod.algebra, prod.iota_b.image())) == len(d)


def test_translation_errors():
    act = _inversion(3)
    prod = na.semidirect(act)
    with pytest.raises(NotACocycle):
        na.desc_to_serre(act, ds.DescentCocycle(prod.iota_b, alg.constant_map(prod.algebra, act.target)))
    with pytest.raises(DomainMismatch):
        na.serre_to_desc(act, na.zero_cocycle(act))
    sl_act = na.trivial_action(alg.semilattice(), alg.cyclic_group(2))
    sl_prod = na.semidirect(sl_act)
    with pytest.raises(NotAGroup):
        na.group_inverse_translation(sl_act, ds.DescentCocycle(sl_prod.iota_b, sl_prod.p_b))


def test_monoid_action_translation():
    act = na.validate_action(alg.semilattice(), alg.cyclic_group(3), [[0, 1, 2], [0, 0, 0]])
    prod = na.semidirect(act)
    op = na.opposite_action(act)
    cs = ds.enumerate_left_cocycles(prod.iota_b, "brute")
    zs = na.z1_serre(op)
    assert sorted(na.desc_to_serre(act, c).q.as_tuple() for c in cs) == sorted(s.q.as_tuple() for s in zs)
