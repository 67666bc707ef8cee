"""Complements, factorizations A = BX, and orbits of complements under conjugation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .algebra import (
    Subgroup,
    _extension_search,
    all_subgroups,
    conjugate_subgroup,
    element_orders,
    is_normal,
    sort_key,
)
from .errors import AmbientMismatch, NotAGroup, NotComplement, NotNormal, OrderTooLarge
from .orbits import partition


@dataclass(frozen=True, eq=False)
class ComplementSet:
    ambient: object
    b: Subgroup
    members: list

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


@dataclass(frozen=True)
class FactorizationRecord:
    b: Subgroup
    x: Subgroup


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    """``orbits[k]`` lists item indices; its first entry is the canonical representative."""

    items: list
    orbits: list

    def __len__(self):
        return len(self.orbits)

    def representatives(self):
        return [self.items[o[0]] for o in self.orbits]


def _require_group(a):
    if not a.is_group:
        raise NotAGroup(f"{a!r} is not a group")


def is_complement(a, b, x):
    """B ∩ X = {1} and BX = A, with BX formed as the set of products."""
    if b.ambient is not a or x.ambient is not a:
        raise AmbientMismatch("subgroups must live in the given group")
    if b.members & x.members != 1 << a.identity:
        return False
    if b.order * x.order != a.order:
        return False
    # the cosets B x for x != 1 must be disjoint from each other and from B
    others = x.elements[x.elements != a.identity]
    prods = a.mul_vec(b.elements[:, None], others[None, :]).ravel()
    return not b.mask[prods].any() and len(np.unique(prods)) == len(prods)


def complements(a, b, cap=None):
    """All complements to B, searched among subgroups of order |A|/|B| built from
    elements outside B whose order divides |A|/|B|."""
    _require_group(a)
    if b.ambient is not a:
        raise AmbientMismatch("subgroup must live in the given group")
    if a.order % b.order:
        return ComplementSet(a, b, [])
    m = a.order // b.order
    cap = config.LIMITS.subgroup_order if cap is None else cap
    if m > cap:
        raise OrderTooLarge(f"complements of order {m} exceed search cap {cap}")
    orders = element_orders(a)
    candidates = np.nonzero(~b.mask & (m % orders == 0))[0]
    one = 1 << a.identity

    def accept(k):
        return m % k.order == 0 and (k.members & b.members) == one

    found = _extension_search(a, candidates, accept, max_order=m)
    members = [x for x in found if x.order == m and is_complement(a, b, x)]
    return ComplementSet(a, b, sorted(members, key=sort_key))


def _conjugation_orbits(a, items, conjugators):
    index = {x.members: i for i, x in enumerate(items)}
    edges = []
    for g in conjugators:
        for i, x in enumerate(items):
            j = index.get(conjugate_subgroup(a, int(g), x).members)
            if j is None:
                raise NotComplement("conjugate of a complement is not in the set")
            edges.append((i, j))
    keys = [sort_key(x) for x in items]
    return partition(len(items), edges, rank=lambda i: keys[i])


def b_orbits_of_complements(a, b, c=None):
    """Classes of complements under conjugation by B (generators suffice)."""
    c = complements(a, b) if c is None else c
    items = list(c.members)
    return OrbitPartition(items, _conjugation_orbits(a, items, b.generators))


def _proper(a, s):
    return 1 < s.order < a.order


def fac(a, cap=None):
    """Ordered pairs (B, X) of proper nontrivial subgroups with B ∩ X = {1}, BX = A."""
    _require_group(a)
    out = []
    for b in all_subgroups(a, cap):
        if not _proper(a, b):
            continue
        out.extend(FactorizationRecord(b, x) for x in complements(a, b) if _proper(a, x))
    return out


def fac_classes(a, records=None):
    """FAC(A) modulo (B, X) ~ (B, X') when X, X' are conjugate in A."""
    records = fac(a) if records is None else records
    by_b = {}
    for i, r in enumerate(records):
        by_b.setdefault(r.b.members, []).append(i)
    orbits = []
    gens = Subgroup(a, (1 << a.order) - 1).generators
    for idxs in by_b.values():
        xs = [records[i].x for i in idxs]
        for cl in _conjugation_orbits(a, xs, gens):
            orbits.append(tuple(idxs[k] for k in cl))
    orbits.sort(key=lambda o: (sort_key(records[o[0]].b), sort_key(records[o[0]].x)))
    return OrbitPartition(list(records), orbits)


@dataclass(frozen=True, eq=False)
class SplitWitness:
    action: object  # MonoidAction of X on B by conjugation
    product: object  # SemidirectProduct B ⋊ X
    iso: object  # ElementMap B ⋊ X -> A, (b, x) |-> b x


def conjugation_action(a, b, x):
    """X acting on a normal B by conjugation, with A ≅ B ⋊ X checked elementwise."""
    from .algebra import ElementMap, check_homomorphism, restrict
    from .nonabelian import semidirect, validate_action

    _require_group(a)
    if not is_normal(a, b):
        raise NotNormal("B is not normal in A")
    if not is_complement(a, b, x):
        raise NotComplement("X is not a complement to B")
    balg, binc = restrict(b)
    xalg, xinc = restrict(x)
    be, xe = b.elements, x.elements
    conj = a.mul_vec(a.mul_vec(xe[:, None], be[None, :]), a.inverse[xe][:, None])
    star = np.searchsorted(be, conj)
    action = validate_action(xalg, balg, star)
    prod = semidirect(action)
    nx = x.order
    idx = np.arange(prod.algebra.order)
    iso = ElementMap(prod.algebra, a, a.mul_vec(be[idx // nx], xe[idx % nx]))
    if not (iso.is_injective() and check_homomorphism(iso)):
        raise NotComplement("(b, x) -> bx is not an isomorphism")
    return SplitWitness(action, prod, iso)
