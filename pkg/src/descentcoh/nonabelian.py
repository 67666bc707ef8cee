"""Monoid actions, semidirect products, non-abelian H^0/H^1 in Serre's sense, and
the translations between descent cocycles for iota_B: B -> B ⋊ X and Serre
cocycles X -> B^op (or X -> B via inversion when both are groups).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import (
    ElementMap,
    FiniteGroup,
    FiniteMonoid,
    Subgroup,
    _TableMul,
    opposite,
    unit_inverse,
    units,
)
from .descent import (
    CocycleClassSet,
    DescentCocycle,
    Verdict,
    PASS,
    desc1,
    is_left_cocycle,
    lex_ranks,
    orbit_classes,
)
from .errors import AxiomViolated, DomainMismatch, IndexOutOfRange, NotACocycle, NotAGroup
from .orbits import partition
from .search import known, lookup, search_maps


@dataclass(frozen=True, eq=False)
class MonoidAction:
    """``star[x, b]`` is x ⋆ b."""

    actor: FiniteMonoid
    target: FiniteMonoid
    star: np.ndarray

    @cached_property
    def opposite(self):
        op = MonoidAction(self.actor, opposite(self.target), self.star)
        op.__dict__["opposite"] = self
        return op

    @cached_property
    def product(self):
        return _semidirect(self)


def _first(bad):
    return tuple(int(v) for v in np.argwhere(bad)[0])


def action_violation(x, b, star):
    """First violated axiom as (name, witness), or None. Axioms are checked in the
    order (i) unit, (iii) x ⋆ 1 = 1, (ii) compatibility, (iv) multiplicativity."""
    tx, tb = x.table, b.table
    idx = np.arange(b.order)
    bad = star[x.identity] != idx
    if bad.any():
        return "i", (int(np.argmax(bad)),)
    bad = star[:, b.identity] != b.identity
    if bad.any():
        return "iii", (int(np.argmax(bad)),)
    lhs = star[tx]  # [x1, x2, b] -> (x1 x2) ⋆ b
    rhs = star[np.arange(x.order)[:, None, None], star[None, :, :]]
    bad = lhs != rhs
    if bad.any():
        return "ii", _first(bad)
    lhs = star[:, tb]  # [x, b1, b2] -> x ⋆ (b1 b2)
    rhs = tb[star[:, :, None], star[:, None, :]]
    bad = lhs != rhs
    if bad.any():
        return "iv", _first(bad)
    return None


def validate_action(x, b, star):
    star = np.asarray(star, dtype=np.int64)
    if star.shape != (x.order, b.order):
        raise IndexOutOfRange(f"star must be {x.order}x{b.order}, got {star.shape}")
    if star.size and (star.min() < 0 or star.max() >= b.order):
        raise IndexOutOfRange("star entry outside B", _first((star < 0) | (star >= b.order)))
    v = action_violation(x, b, star)
    if v:
        raise AxiomViolated(*v)
    star.setflags(write=False)
    return MonoidAction(x, b, star)


def trivial_action(x, b):
    return validate_action(x, b, np.tile(np.arange(b.order), (x.order, 1)))


@dataclass(frozen=True, eq=False)
class SemidirectProduct:
    action: MonoidAction
    algebra: FiniteMonoid  # element b * |X| + x is the pair (b, x)
    iota_b: ElementMap
    iota_x: ElementMap
    p_b: ElementMap  # set projection (b, x) |-> b
    p_x: ElementMap


def _semidirect(action):
    x, b, star = action.actor, action.target, action.star
    nb, nx = b.order, x.order
    i = np.arange(nb * nx)
    bi, xi = i // nx, i % nx
    tb, tx = b.table, x.table
    # (b1, x1)(b2, x2) = (b1 (x1 ⋆ b2), x1 x2)
    t = tb[bi[:, None], star[xi[:, None], bi[None, :]]] * nx + tx[xi[:, None], xi[None, :]]
    ident = b.identity * nx + x.identity
    name = f"{b.name}x|{x.name}"
    labeler = lambda k: f"({b.label(k // nx)},{x.label(k % nx)})"
    if x.is_group and b.is_group:
        xinv = x.inverse[xi]
        inv = star[xinv, b.inverse[bi]] * nx + xinv  # (x^-1 ⋆ b^-1, x^-1)
        alg = FiniteGroup(nb * nx, ident, _TableMul(t), inv, table=t, name=name, labeler=labeler)
    else:
        alg = FiniteMonoid(nb * nx, ident, _TableMul(t), table=t, name=name, labeler=labeler)
    return SemidirectProduct(
        action, alg,
        ElementMap(b, alg, np.arange(nb) * nx + x.identity),
        ElementMap(x, alg, b.identity * nx + np.arange(nx)),
        ElementMap(alg, b, bi),
        ElementMap(alg, x, xi),
    )


def semidirect(action):
    """B ⋊ X; cached on the action so repeated calls share one algebra."""
    return action.product


def opposite_action(action):
    """The same star table viewed as an action on B^op."""
    return action.opposite


@dataclass(frozen=True, eq=False)
class SerreCocycle:
    action: MonoidAction
    q: ElementMap  # X -> B


def _check_serre_shape(action, q):
    if q.domain is not action.actor or q.codomain is not action.target:
        raise DomainMismatch("q must map the actor to the target of the action")


def is_serre_cocycle(action, q):
    """q(1) = 1 and q(x1 x2) = q(x1) (x1 ⋆ q(x2)) for all pairs."""
    _check_serre_shape(action, q)
    x, b, star = action.actor, action.target, action.star
    qv = q.values
    if qv[x.identity] != b.identity:
        return Verdict(False, "unit", (x.identity,))
    lhs = qv[x.table]
    rhs = b.table[qv[:, None], star[:, qv]]
    bad = lhs != rhs
    if bad.any():
        return Verdict(False, "cocycle", _first(bad))
    return PASS


def zero_cocycle(action):
    return SerreCocycle(action, ElementMap(action.actor, action.target,
                                           np.full(action.actor.order, action.target.identity)))


def z1_serre(action, budget=None):
    """All Serre 1-cocycles, base point first, then lexicographic."""
    x, b, star = action.actor, action.target, action.star
    tx, tb = x.table, b.table
    ex, eb = x.identity, b.identity

    def violates(q):
        if q[ex] >= 0 and q[ex] != eb:
            return True
        assigned = q >= 0
        safe = np.where(assigned, q, 0)
        lhs = lookup(q, tx)
        acted = np.where(assigned[None, :], star[:, safe], -1)  # [x1, x2] -> x1 ⋆ q(x2)
        left = np.where(assigned[:, None], q[:, None], -1)
        rhs = np.where(known(left, acted), tb[np.maximum(left, 0), np.maximum(acted, 0)], -1)
        return bool(((lhs != rhs) & known(lhs, rhs)).any())

    order = [ex] + [i for i in range(x.order) if i != ex]
    found = [ElementMap(x, b, q) for q in search_maps(x.order, b.order, violates, order=order,
                                                      budget=budget, what="Serre cocycle candidates")]
    found.sort(key=lambda m: (bool((m.values != eb).any()), m.as_tuple()))
    return [SerreCocycle(action, m) for m in found]


def serre_equivalent(s1, s2):
    """A unit b0 with q(x) (x ⋆ b0) = b0 q'(x) for all x, or None."""
    if s1.action is not s2.action:
        raise DomainMismatch("cocycles for different actions")
    action = s1.action
    b, star = action.target, action.star
    q1, q2 = s1.q.values, s2.q.values
    for b0 in units(b).elements:
        if np.array_equal(b.table[q1, star[:, b0]], b.table[b0, q2]):
            return int(b0)
    return None


def serre_twist(s, b0):
    """x |-> b0^-1 q(x) (x ⋆ b0), the cocycle equivalent to s through b0."""
    action = s.action
    b, star = action.target, action.star
    tb = b.table
    vals = tb[tb[unit_inverse(b, b0), s.q.values], star[:, b0]]
    return SerreCocycle(action, ElementMap(action.actor, b, vals))


def h1(action, cocycles=None, budget=None):
    """H^1(X, B), pointed at the class of the constant cocycle."""
    cocycles = z1_serre(action, budget) if cocycles is None else list(cocycles)
    gens = units(action.target).generators
    edges = orbit_classes(cocycles, lambda s: s.q.key, serre_twist, gens)
    rank = lex_ranks([s.q for s in cocycles])
    classes = partition(len(cocycles), edges, rank=lambda i: rank[i])
    zero = zero_cocycle(action).q.key
    base = next(i for i, s in enumerate(cocycles) if s.q.key == zero)
    return CocycleClassSet(cocycles, classes, next(k for k, c in enumerate(classes) if base in c))


def h0(action):
    """Elements of B fixed by every x."""
    b = action.target
    return Subgroup.from_mask(b, (action.star == np.arange(b.order)).all(axis=0))


def desc_to_serre(action, c):
    """q |-> (x |-> q(1, x)), a Serre cocycle for the opposite action."""
    prod = semidirect(action)
    if c.iota is not prod.iota_b:
        raise DomainMismatch("cocycle is not for iota_B of this semidirect product")
    v = is_left_cocycle(c.iota, c.q)
    if not v:
        raise NotACocycle(f"{v.condition} fails", v.witness)
    op = opposite_action(action)
    return SerreCocycle(op, ElementMap(action.actor, op.target, c.q.values[prod.iota_x.values]))


def serre_to_desc(action, s):
    """q' |-> ((b, x) |-> b q'(x)), multiplying in B."""
    if s.action is not opposite_action(action):
        raise DomainMismatch("expected a cocycle for the opposite action")
    prod = semidirect(action)
    b = action.target
    nx = action.actor.order
    i = np.arange(prod.algebra.order)
    vals = b.table[i // nx, s.q.values[i % nx]]
    return DescentCocycle(prod.iota_b, ElementMap(prod.algebra, b, vals))


def group_inverse_translation(action, c):
    """x |-> q(1, x)^-1, a Serre cocycle with values in B itself."""
    x, b = action.actor, action.target
    if not (x.is_group and b.is_group):
        raise NotAGroup("inverse translation needs X and B to be groups")
    prod = semidirect(action)
    if c.iota is not prod.iota_b:
        raise DomainMismatch("cocycle is not for iota_B of this semidirect product")
    return SerreCocycle(action, ElementMap(x, b, b.inverse[c.q.values[prod.iota_x.values]]))


def class_map(source, target, translate):
    """Induced map on classes, as a list of target class indices, or None when the
    translation is not constant on some source class."""
    where = {}
    for k, cl in enumerate(target.classes):
        for i in cl:
            where[target.cocycles[i].q.key] = k
    out = []
    for cl in source.classes:
        images = {where.get(translate(source.cocycles[i]).q.key) for i in cl}
        if len(images) != 1 or None in images:
            return None
        out.append(images.pop())
    return out


def translation_is_bijective(action, budget=None):
    """Desc^1(iota_B) -> H^1(X, B) via group_inverse_translation is a pointed bijection."""
    prod = semidirect(action)
    d = desc1(prod.iota_b, base=DescentCocycle(prod.iota_b, prod.p_b), budget=budget)
    h = h1(action, budget=budget)
    m = class_map(d, h, lambda c: group_inverse_translation(action, c))
    return (m is not None and sorted(m) == list(range(len(h)))
            and m[d.base_class] == h.base_class)
