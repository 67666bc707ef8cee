import pytest
from hypothesis import given, strategies as st

import oracles
from descentcoh import algebra as alg
from descentcoh import factorization as fz
from descentcoh.errors import AmbientMismatch, NotComplement, NotNormal, OrderTooLarge


def _s3():
    s3 = alg.symmetric_group(3)
    return s3, alg.subgroup_generated(s3, [s3.index_of("(1 2)")]), alg.alternating_subgroup(s3)


def test_is_complement_examples():
    s3, tau, a3 = _s3()
    assert fz.is_complement(s3, tau, a3)
    assert fz.is_complement(s3, alg.trivial_subgroup(s3), alg.whole(s3))
    z4 = alg.cyclic_group(4)
    two = alg.Subgroup.from_elements(z4, [0, 2])
    assert not fz.is_complement(z4, two, two)
    with pytest.raises(AmbientMismatch):
        fz.is_complement(s3, tau, alg.whole(z4))


def test_complements_examples():
    s3, tau, a3 = _s3()
    assert [x.labels() for x in fz.complements(s3, tau)] == [["()", "(1 2 3)", "(1 3 2)"]]
    assert list(fz.complements(s3, alg.trivial_subgroup(s3))) == [alg.whole(s3)]
    z4 = alg.cyclic_group(4)
    assert len(fz.complements(z4, alg.Subgroup.from_elements(z4, [0, 2]))) == 0
    assert len(fz.complements(s3, a3)) == 3


def test_complement_search_cap():
    s8 = alg.symmetric_group(8)
    with pytest.raises(OrderTooLarge):
        fz.complements(s8, alg.trivial_subgroup(s8))


CASES = [lambda: alg.symmetric_group(3), lambda: alg.dihedral_group(4), alg.quaternion_group,
         lambda: alg.cyclic_group(12), lambda: alg.direct_product(alg.cyclic_group(2), alg.cyclic_group(4))]


@pytest.mark.parametrize("make", CASES)
def test_complements_match_definition_scan(make):
    g = make()
    t = oracles.table_of(g)
    subs = oracles.subgroups_by_subsets(t, g.identity)
    for b in alg.all_subgroups(g):
        bset = frozenset(int(v) for v in b.elements)
        expected = set(oracles.complements_by_definition(t, g.identity, bset, subs))
        got = {frozenset(int(v) for v in x.elements) for x in fz.complements(g, b)}
        assert got == expected


@pytest.mark.parametrize("make", CASES + [lambda: alg.symmetric_group(4)])
def test_conjugates_of_complements_are_complements(make):
    g = make()
    for b in alg.all_subgroups(g):
        comps = fz.complements(g, b)
        have = {x.members for x in comps}
        for x in comps:
            assert x.order == g.order // b.order
            for a in range(g.order):
                assert alg.conjugate_subgroup(g, a, x).members in have


@pytest.mark.parametrize("make", CASES)
def test_unique_factorization(make):
    g = make()
    for b in alg.all_subgroups(g):
        for x in fz.complements(g, b):
            counts = {}
            for bb in b.elements:
                for xx in x.elements:
                    p = g.mul(bb, xx)
                    counts[p] = counts.get(p, 0) + 1
            assert len(counts) == g.order and set(counts.values()) == {1}


def test_b_orbits_examples():
    s3, tau, a3 = _s3()
    assert len(fz.b_orbits_of_complements(s3, a3)) == 1
    assert len(fz.b_orbits_of_complements(s3, tau)) == 1
    s6 = alg.symmetric_group(6)
    orbits = fz.b_orbits_of_complements(s6, alg.alternating_subgroup(s6))
    assert len(orbits) == 2
    assert sorted(len(o) for o in orbits.orbits) == [15, 15]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_b_orbits_match_direct_conjugation(n):
    s = alg.symmetric_group(n)
    orbits = fz.b_orbits_of_complements(s, alg.alternating_subgroup(s))
    assert len(orbits) == oracles.odd_involution_classes_under_alternating(n)


def test_b_orbits_invariant_under_relabeling():
    # conjugating both B and the ambient labels by an automorphism keeps the orbit count
    s4 = alg.symmetric_group(4)
    for b in alg.all_subgroups(s4):
        n = len(fz.b_orbits_of_complements(s4, b))
        for a in (s4.index_of("(1 2)"), s4.index_of("(1 2 3 4)")):
            b2 = alg.conjugate_subgroup(s4, a, b)
            assert len(fz.b_orbits_of_complements(s4, b2)) == n


def test_fac_examples():
    s3, _, _ = _s3()
    recs = fz.fac(s3)
    assert len(recs) == 6
    assert sorted((r.b.order, r.x.order) for r in recs) == [(2, 3)] * 3 + [(3, 2)] * 3
    assert fz.fac(alg.cyclic_group(4)) == []
    assert fz.fac(alg.cyclic_group(7)) == []
    classes = fz.fac_classes(s3)
    assert len(classes) == 4
    assert sorted(len(o) for o in classes.orbits) == [1, 1, 1, 3]
    assert len(fz.fac_classes(alg.cyclic_group(1))) == 0
    assert len(fz.fac_classes(alg.cyclic_group(4))) == 0


@pytest.mark.parametrize("make", CASES + [lambda: alg.symmetric_group(4), lambda: alg.cyclic_group(6)])
def test_fac_is_sum_over_b(make):
    g = make()
    total = orbit_total = 0
    for b in alg.all_subgroups(g):
        if not 1 < b.order < g.order:
            continue
        comps = fz.complements(g, b)
        total += sum(1 for x in comps if 1 < x.order < g.order)
        orbit_total += sum(1 for o in fz.b_orbits_of_complements(g, b, comps).orbits
                           if 1 < comps[o[0]].order < g.order)
    assert len(fz.fac(g)) == total
    assert len(fz.fac_classes(g)) == orbit_total


def test_conjugation_action_examples():
    s3, tau, a3 = _s3()
    w = fz.conjugation_action(s3, a3, tau)
    # the nonidentity element of X inverts A3
    b = w.action.target
    assert [b.label(v) for v in w.action.star[1]] == ["()", "(1 3 2)", "(1 2 3)"]
    assert w.iso.is_injective() and alg.check_homomorphism(w.iso)
    z = alg.cyclic_group(5)
    w = fz.conjugation_action(z, alg.whole(z), alg.trivial_subgroup(z))
    assert w.action.star.tolist() == [list(range(5))]
    v4 = alg.direct_product(alg.cyclic_group(2), alg.cyclic_group(2))
    w = fz.conjugation_action(v4, alg.Subgroup.from_elements(v4, [0, 2]), alg.Subgroup.from_elements(v4, [0, 1]))
    assert (w.action.star == [[0, 1], [0, 1]]).all()
    with pytest.raises(NotNormal):
        fz.conjugation_action(s3, tau, a3)
    with pytest.raises(NotComplement):
        fz.conjugation_action(s3, a3, a3)


@given(st.integers(0, 29))
def test_complement_sets_sorted_and_valid(idx):
    s4 = alg.symmetric_group(4)
    b = alg.all_subgroups(s4)[idx]
    comps = fz.complements(s4, b)
    keys = [alg.sort_key(x) for x in comps]
    assert keys == sorted(keys)
    assert all(alg.is_subgroup(x) and fz.is_complement(s4, b, x) for x in comps)
