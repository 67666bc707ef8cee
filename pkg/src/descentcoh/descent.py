"""Descent 1-cocycles of a monoid homomorphism iota: B -> A.

A left cocycle is a map q: A -> B with

    ZL1  q(1_A) = 1_B
    ZL2  q(iota(b) a) = b q(a)
    ZL3  q(a a') = q(a iota(q(a')))

and the right-handed conditions ZR1-ZR3 mirror these. Two left cocycles are
equivalent when q(a) b0 = q'(a iota(b0)) for some unit b0 of B; Desc^1 is the
set of classes and Desc^0 the stabilizer of a chosen cocycle.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    ElementMap,
    FiniteMonoid,
    Subgroup,
    center,
    check_homomorphism,
    enumerate_homomorphisms,
    is_commutative,
    is_subgroup,
    restrict,
    unit_inverse,
    units,
)
from .errors import (
    AmbientMismatch,
    DomainMismatch,
    NotACocycle,
    NotAGroup,
    NotCentral,
    NotComplement,
    NotHomomorphism,
    NotInjective,
    NotSchreier,
    NotSplit,
)
from .factorization import complements, is_complement
from .orbits import partition
from .search import known, lookup, search_maps

LEFT = ("ZL1", "ZL2", "ZL3")
RIGHT = ("ZR1", "ZR2", "ZR3")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law check: the first failing condition and its witness."""

    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


@dataclass(frozen=True, eq=False)
class DescentCocycle:
    iota: ElementMap  # B -> A
    q: ElementMap  # A -> B
    side: str = "left"

    def __post_init__(self):
        if self.q.domain is not self.iota.codomain or self.q.codomain is not self.iota.domain:
            raise DomainMismatch("q must map the codomain of iota back to its domain")


@dataclass(frozen=True, eq=False)
class CocycleClassSet:
    """Cocycles partitioned into classes; ``classes[k][0]`` is the canonical representative."""

    cocycles: list
    classes: list
    base_class: int | None = None

    def __len__(self):
        return len(self.classes)

    def representatives(self):
        return [self.cocycles[c[0]] for c in self.classes]

    def class_of(self, i):
        for k, c in enumerate(self.classes):
            if i in c:
                return k
        raise IndexError(i)


def _check_shapes(iota, q):
    if q.domain is not iota.codomain or q.codomain is not iota.domain:
        raise DomainMismatch("q must map the codomain of iota back to its domain")


def _first(bad):
    return tuple(int(v) for v in np.argwhere(bad)[0])


def is_left_cocycle(iota, q, conditions=LEFT):
    """Exhaustive check of ZL1-ZL3 (or the requested subset), in that order."""
    _check_shapes(iota, q)
    a, b = iota.codomain, iota.domain
    ta, tb = a.table, b.table
    iv, qv = iota.values, q.values
    if "ZL1" in conditions and qv[a.identity] != b.identity:
        return Verdict(False, "ZL1", (a.identity,))
    if "ZL2" in conditions:
        bad = qv[ta[iv]] != tb[:, qv]  # [b, a]
        if bad.any():
            return Verdict(False, "ZL2", _first(bad))
    if "ZL3" in conditions:
        bad = qv[ta] != qv[ta[:, iv[qv]]]  # [a, a']
        if bad.any():
            return Verdict(False, "ZL3", _first(bad))
    return PASS


def is_right_cocycle(iota, p, conditions=RIGHT):
    _check_shapes(iota, p)
    a, b = iota.codomain, iota.domain
    ta, tb = a.table, b.table
    iv, pv = iota.values, p.values
    if "ZR1" in conditions and pv[a.identity] != b.identity:
        return Verdict(False, "ZR1", (a.identity,))
    if "ZR2" in conditions:
        bad = pv[ta[:, iv]] != tb[pv]  # [a, b]: p(a iota(b)) vs p(a) b
        if bad.any():
            return Verdict(False, "ZR2", _first(bad))
    if "ZR3" in conditions:
        bad = pv[ta] != pv[ta[iv[pv]]]  # [a, a']: p(a a') vs p(iota(p(a)) a')
        if bad.any():
            return Verdict(False, "ZR3", _first(bad))
    return PASS


def _partial_left_violation(iota, conditions):
    a, b = iota.codomain, iota.domain
    ta, tb = a.table, b.table
    iv = iota.values
    lhs2_idx = ta[iv]
    e_a, e_b = a.identity, b.identity

    def violates(q):
        if "ZL1" in conditions and q[e_a] >= 0 and q[e_a] != e_b:
            return True
        assigned = q >= 0
        safe = np.where(assigned, q, 0)
        if "ZL2" in conditions:
            lhs = q[lhs2_idx]
            rhs = np.where(assigned[None, :], tb[:, safe], -1)
            if ((lhs != rhs) & known(lhs, rhs)).any():
                return True
        if "ZL3" in conditions:
            lhs = q[ta]
            rhs = np.where(assigned[None, :], lookup(q, ta[:, iv[safe]]), -1)
            if ((lhs != rhs) & known(lhs, rhs)).any():
                return True
        return False

    return violates


def search_left_cocycles(iota, conditions=LEFT, budget=None):
    """Brute force over all maps A -> B satisfying the given conditions."""
    a, b = iota.codomain, iota.domain
    order = [a.identity] + [i for i in range(a.order) if i != a.identity]
    found = search_maps(a.order, b.order, _partial_left_violation(iota, conditions),
                        order=order, budget=budget, what="cocycle candidates")
    return [DescentCocycle(iota, ElementMap(a, b, q)) for q in found]


def cocycle_from_complement(iota, x, verify=True):
    """q_X(a) = the unique b with a = iota(b) x, x in X."""
    a, b = iota.codomain, iota.domain
    if not (a.is_group and b.is_group):
        raise NotAGroup("complement cocycles need groups")
    if x.ambient is not a:
        raise AmbientMismatch("complement lives in a different group")
    if not iota.is_injective():
        raise NotInjective("iota is not injective")
    if verify and not is_complement(a, iota.image(), x):
        raise NotComplement("X is not a complement to iota(B)")
    # q(iota(b) x) = b, filled coset by coset
    q = np.full(a.order, -1, dtype=np.int64)
    for xe in x.elements:
        q[a.mul_vec(iota.values, xe)] = np.arange(b.order)
    return DescentCocycle(iota, ElementMap(a, b, q))


def kernel_of_cocycle(c, verify=True):
    """Ker(q) = {a : q(a) = 1_B}; checked to be a complement to iota(B)."""
    a, b = c.iota.codomain, c.iota.domain
    if not a.is_group:
        raise NotAGroup("kernel correspondence needs a group A")
    if verify:
        v = is_left_cocycle(c.iota, c.q)
        if not v:
            raise NotACocycle(f"{v.condition} fails", v.witness)
    ker = Subgroup.from_mask(a, c.q.values == b.identity)
    if not (is_subgroup(ker) and is_complement(a, c.iota.image(), ker)):
        raise NotACocycle("kernel is not a complement to iota(B)")
    return ker


def enumerate_left_cocycles(iota, strategy="auto", budget=None):
    """All left cocycles for iota.

    ``group``: via complements of iota(B) (A, B groups, iota injective).
    ``brute``: exhaustive map search, any monoids, guarded by ``budget``.
    """
    a, b = iota.codomain, iota.domain
    if strategy == "auto":
        strategy = "group" if (a.is_group and b.is_group and iota.is_injective()) else "brute"
    if strategy == "group":
        if not iota.is_injective():
            raise NotInjective("group strategy needs injective iota")
        comps = complements(a, iota.image())
        return [cocycle_from_complement(iota, x, verify=False) for x in comps.members]
    if strategy == "brute":
        return search_left_cocycles(iota, budget=budget)
    raise ValueError(f"unknown strategy {strategy!r}")


def cocycles_equivalent(c1, c2):
    """A unit b0 with q1(a) b0 = q2(a iota(b0)) for all a, or None."""
    if c1.iota is not c2.iota:
        raise DomainMismatch("cocycles for different homomorphisms")
    iota = c1.iota
    a, b = iota.codomain, iota.domain
    idx = np.arange(a.order)
    for b0 in units(b).elements:
        lhs = b.mul_vec(c1.q.values, b0)
        rhs = c2.q.values[a.mul_vec(idx, iota.values[b0])]
        if np.array_equal(lhs, rhs):
            return int(b0)
    return None


def twist(c, b0):
    """The cocycle equivalent to c via the unit b0: a |-> q(a iota(b0)^-1) b0."""
    iota = c.iota
    a, b = iota.codomain, iota.domain
    right_a = a.right_translation(iota.values[unit_inverse(b, b0)])
    right_b = b.right_translation(b0)
    return DescentCocycle(iota, ElementMap(a, b, right_b[c.q.values[right_a]]), c.side)


def _lex_cmp(x, y):
    d = np.nonzero(x != y)[0]
    if not d.size:
        return 0
    return -1 if x[d[0]] < y[d[0]] else 1


def lex_ranks(maps):
    order = sorted(range(len(maps)), key=functools.cmp_to_key(lambda i, j: _lex_cmp(maps[i].values, maps[j].values)))
    rank = np.empty(len(maps), dtype=np.int64)
    rank[order] = np.arange(len(maps))
    return rank


def orbit_classes(items, keyed, act, gens):
    """Partition ``items`` under the group generated by ``gens`` acting via ``act``."""
    index = {keyed(x): i for i, x in enumerate(items)}
    edges = []
    for g in gens:
        for i, x in enumerate(items):
            j = index.get(keyed(act(x, g)))
            if j is None:
                raise NotACocycle("cocycle set is not closed under the unit action")
            edges.append((i, j))
    return edges


def desc1(iota, base=None, cocycles=None, strategy="auto", budget=None):
    """Desc^1: classes of left cocycles; pointed at ``base`` when given.

    Classes are orbits of the unit group of B acting by ``twist``, computed from
    its generators; representatives are lexicographically smallest.
    """
    cocycles = list(cocycles) if cocycles is not None else enumerate_left_cocycles(iota, strategy, budget)
    b = iota.domain
    gens = units(b).generators
    edges = orbit_classes(cocycles, lambda c: c.q.key, twist, gens)
    rank = lex_ranks([c.q for c in cocycles])
    classes = partition(len(cocycles), edges, rank=lambda i: rank[i])
    base_class = None
    if base is not None:
        keys = [c.q.key for c in cocycles]
        if base.q.key not in keys:
            raise NotACocycle("base point is not among the cocycles")
        i = keys.index(base.q.key)
        base_class = next(k for k, cl in enumerate(classes) if i in cl)
    return CocycleClassSet(cocycles, classes, base_class)


def desc0(base):
    """Units b0 of B with q(a iota(b0)) = q(a) b0 for all a."""
    v = is_left_cocycle(base.iota, base.q)
    if not v:
        raise NotACocycle(f"{v.condition} fails", v.witness)
    iota = base.iota
    a, b = iota.codomain, iota.domain
    idx = np.arange(a.order)
    qv = base.q.values
    keep = [int(b0) for b0 in units(b).elements
            if np.array_equal(qv[a.mul_vec(idx, iota.values[b0])], b.mul_vec(qv, b0))]
    return Subgroup.from_elements(b, keep)


def schreier_retraction(p, j):
    """For a split epimorphism p with section j in which every a factors uniquely
    as k * j(p(a)) with k in Ker(p), return the cocycle a |-> k for Ker(p) -> A."""
    a, b = p.domain, p.codomain
    if j.domain is not b or j.codomain is not a:
        raise DomainMismatch("j must map the codomain of p back to its domain")
    for name, h in (("p", p), ("j", j)):
        if not check_homomorphism(h):
            raise NotHomomorphism(f"{name} is not a homomorphism")
    bad = np.nonzero(p.values[j.values] != np.arange(b.order))[0]
    if bad.size:
        raise NotSplit("p o j is not the identity", (int(bad[0]),))
    ker = Subgroup.from_mask(a, p.values == b.identity)
    kalg, kappa = restrict(ker)
    kel = ker.elements
    q = np.empty(a.order, dtype=np.int64)
    section = j.values[p.values]
    for x in range(a.order):
        hits = np.nonzero(a.mul_vec(kel, section[x]) == x)[0]
        if len(hits) != 1:
            raise NotSchreier(f"{a.label(x)} has {len(hits)} decompositions", (x, len(hits)))
        q[x] = hits[0]
    return DescentCocycle(kappa, ElementMap(a, kalg, q))


def retractions(iota, budget=None):
    """Homomorphisms r: A -> B with r o iota = id."""
    a, b = iota.codomain, iota.domain
    ident = np.arange(b.order)
    return [r for r in enumerate_homomorphisms(a, b, budget=budget)
            if np.array_equal(r.values[iota.values], ident)]


def is_central(iota):
    b = iota.domain
    return is_commutative(b) and bool(center(iota.codomain).mask[iota.values].all())


@dataclass(frozen=True, eq=False)
class CentralReport:
    cocycles: list
    retractions: list
    classes: CocycleClassSet
    cocycles_are_retractions: bool
    classes_are_singletons: bool


def central_cocycle_report(iota, budget=None):
    if not is_central(iota):
        raise NotCentral("B is not commutative or iota(B) is not central")
    cocycles = enumerate_left_cocycles(iota, budget=budget)
    rets = retractions(iota, budget=budget)
    classes = desc1(iota, cocycles=cocycles)
    same = {c.q.key for c in cocycles} == {r.key for r in rets} and len(cocycles) == len(rets)
    return CentralReport(cocycles, rets, classes, same, all(len(c) == 1 for c in classes.classes))
