"""Finite monoids and groups over dense element indices, subgroups as bitsets,
element maps, and the standard constructors.

Multiplication is exposed through ``mul_vec`` (broadcasting numpy indices), so
large permutation groups such as S_8 never need a materialized Cayley table;
the exhaustive checks elsewhere use ``table`` and are capped by
``config.LIMITS.table_order``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import config
from .errors import (
    AmbientMismatch,
    BadIdentity,
    DegreeTooLarge,
    DomainMismatch,
    IndexOutOfRange,
    NotAGroup,
    NotASymmetricGroup,
    NotAssociative,
    NotHomomorphism,
    OrderTooLarge,
    SearchBudgetExceeded,
)
from .perm import Permutation, format_cycles, parse_cycles

# ---------------------------------------------------------------------------
# multiplication backends


class _TableMul:
    def __init__(self, table):
        self.table = table

    def __call__(self, i, j):
        return self.table[i, j]


# largest code space d^(d-1) for which a dense code -> index array is kept
DENSE_CODES = 1 << 22


class _PermMul:
    """Composition of permutations stored as lexicographically sorted rows."""

    def __init__(self, perms):
        self.perms = perms
        d = perms.shape[1]
        # base-d code of the first d-1 images (the last one is then determined);
        # lexicographic order of permutations is numeric order of codes
        self.weights = np.append(d ** np.arange(d - 2, -1, -1, dtype=np.int64), 0)
        self.codes = perms @ self.weights
        self.slot = None
        if d ** max(d - 1, 0) <= DENSE_CODES:
            self.slot = np.full(d ** max(d - 1, 0), -1, dtype=np.int32)
            self.slot[self.codes] = np.arange(len(perms))

    def index(self, images):
        images = np.asarray(images, dtype=np.int64)
        codes = images @ self.weights
        if self.slot is not None:
            pos = self.slot[codes].astype(np.int64)
            if (pos < 0).any():
                raise IndexOutOfRange("permutation not in group")
            return pos
        pos = np.searchsorted(self.codes, codes)
        pos = np.minimum(pos, len(self.codes) - 1)
        if not np.all(self.codes[pos] == codes):
            raise IndexOutOfRange("permutation not in group")
        return pos

    def __call__(self, i, j):
        shape = i.shape
        pi = self.perms[i.ravel()]
        pj = self.perms[j.ravel()]
        return self.index(np.take_along_axis(pi, pj, axis=1)).reshape(shape)


class _InducedMul:
    def __init__(self, parent, members):
        self.parent = parent
        self.members = members

    def __call__(self, i, j):
        prod = self.parent.mul_vec(self.members[i], self.members[j])
        return np.searchsorted(self.members, prod)


# ---------------------------------------------------------------------------
# algebras


class FiniteMonoid:
    """A finite monoid on the indices ``0..order-1``.

    Instances are immutable after construction and compared by identity.
    """

    def __init__(self, order, identity, mul, *, table=None, name="", labeler=None, perms=None):
        self.order = int(order)
        self.identity = int(identity)
        self._mul = mul
        self.name = name
        self._labeler = labeler
        self.perms = perms
        if table is not None:
            self.__dict__["table"] = table

    def __len__(self):
        return self.order

    def __repr__(self):
        kind = "group" if self.is_group else "monoid"
        return f"<{kind} {self.name or '?'} of order {self.order}>"

    @property
    def is_group(self):
        return False

    def mul_vec(self, i, j):
        i, j = np.broadcast_arrays(np.asarray(i, dtype=np.int64), np.asarray(j, dtype=np.int64))
        return np.asarray(self._mul(i, j), dtype=np.int64)

    def mul(self, i, j):
        return int(self.mul_vec(i, j))

    def right_translation(self, g):
        """The array a |-> a g, cached per element."""
        cache = self.__dict__.setdefault("_right", {})
        g = int(g)
        if g not in cache:
            v = self.mul_vec(np.arange(self.order), g)
            v.setflags(write=False)
            cache[g] = v
        return cache[g]

    @cached_property
    def table(self):
        if self.order > config.LIMITS.table_order:
            raise OrderTooLarge(f"refusing to tabulate {self!r}")
        idx = np.arange(self.order)
        return np.stack([self.mul_vec(i, idx) for i in idx])

    def label(self, i):
        return self._labeler(int(i)) if self._labeler else str(int(i))

    def permutation(self, i):
        if self.perms is None:
            raise NotASymmetricGroup(f"{self!r} carries no permutation data")
        return Permutation(tuple(int(v) for v in self.perms[i]))

    def index_of(self, perm):
        """Index of a permutation (``Permutation``, images, or cycle string)."""
        if self.perms is None:
            raise NotASymmetricGroup(f"{self!r} carries no permutation data")
        if isinstance(perm, str):
            perm = parse_cycles(perm, self.perms.shape[1])
        images = perm.images if isinstance(perm, Permutation) else Permutation(tuple(perm)).images
        return int(self._mul.index(np.array([images]))[0])


class FiniteGroup(FiniteMonoid):
    def __init__(self, order, identity, mul, inverse, **kw):
        super().__init__(order, identity, mul, **kw)
        self.inverse = np.asarray(inverse, dtype=np.int64)

    @property
    def is_group(self):
        return True

    def inv(self, i):
        return int(self.inverse[i])


def _table_monoid(table, identity, name="", labeler=None):
    table = np.ascontiguousarray(table, dtype=np.int64)
    return FiniteMonoid(len(table), identity, _TableMul(table), table=table, name=name, labeler=labeler)


def validate_monoid(order, table, identity, name=""):
    """Check shape, identity and (exhaustively) associativity of a Cayley table."""
    try:
        t = np.asarray(table, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise IndexOutOfRange(f"table is not a rectangular integer array: {exc}")
    n = int(order)
    if n < 1 or t.shape != (n, n):
        raise IndexOutOfRange(f"table must be {n}x{n}, got shape {t.shape}")
    if t.min() < 0 or t.max() >= n:
        bad = tuple(int(v) for v in np.argwhere((t < 0) | (t >= n))[0])
        raise IndexOutOfRange(f"table entry out of range at {bad}", bad)
    if not 0 <= identity < n:
        raise IndexOutOfRange(f"identity {identity} out of range", (identity,))
    idx = np.arange(n)
    bad = np.nonzero((t[identity] != idx) | (t[:, identity] != idx))[0]
    if bad.size:
        w = int(bad[0])
        raise BadIdentity(f"{identity} is not a two-sided identity (fails at {w})", (w,))
    for i in range(n):
        left = t[t[i]]  # [j, k] -> (i j) k
        right = t[i][t]  # [j, k] -> i (j k)
        diff = np.argwhere(left != right)
        if diff.size:
            j, k = (int(v) for v in diff[0])
            raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})", (i, j, k))
    return _table_monoid(t, identity, name)


def as_group(m):
    if isinstance(m, FiniteGroup):
        return m
    t = m.table
    e = m.identity
    hits = (t == e) & (t.T == e)
    ok = hits.any(axis=1)
    if not ok.all():
        w = int(np.nonzero(~ok)[0][0])
        raise NotAGroup(f"element {m.label(w)} has no inverse", (w,))
    inverse = hits.argmax(axis=1)
    return FiniteGroup(m.order, e, m._mul, inverse, table=t, name=m.name, labeler=m._labeler, perms=m.perms)


def _perm_group(perms, name=""):
    perms = np.asarray(perms, dtype=np.int64)
    mul = _PermMul(perms)
    d = perms.shape[1]
    identity = int(mul.index(np.arange(d)[None, :])[0])
    inverse = mul.index(np.argsort(perms, axis=1))
    return FiniteGroup(len(perms), identity, mul, inverse, name=name,
                       labeler=lambda i: format_cycles(perms[i]), perms=perms)


def symmetric_group(n, cap=None):
    """S_n with elements indexed in lexicographic order of one-line notation."""
    cap = config.LIMITS.symmetric_degree if cap is None else cap
    if n < 1:
        raise IndexOutOfRange("degree must be positive")
    if n > cap:
        raise DegreeTooLarge(f"S_{n} exceeds degree cap {cap}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    g = _perm_group(perms, f"S{n}")
    g.symmetric_degree = n
    return g


def permutation_group(degree, generators, name=""):
    """Group generated by permutations (cycle strings or image tuples), lex-indexed."""
    gens = [parse_cycles(g, degree) if isinstance(g, str) else tuple(g) for g in generators]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                r = tuple(p[j] for j in s)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return _perm_group(sorted(seen), name)


def permutation_parity(m):
    """0 for even, 1 for odd, per element of a permutation group."""
    p = m.perms
    d = p.shape[1]
    inv = np.zeros(len(p), dtype=np.int64)
    for i in range(d):
        for j in range(i + 1, d):
            inv += p[:, i] > p[:, j]
    return inv % 2


def alternating_subgroup(s):
    if s.perms is None or s.order != math.factorial(s.perms.shape[1]):
        raise NotASymmetricGroup(f"{s!r} is not a full symmetric group")
    return Subgroup.from_mask(s, permutation_parity(s) == 0)


def cyclic_group(n):
    idx = np.arange(n)
    t = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(n, 0, _TableMul(t), (-idx) % n, table=t, name=f"Z{n}")


def cyclic_monoid(index, period):
    """Monoid <x | x^(index+period) = x^index>; element k stands for x^k."""
    n = index + period
    s = np.arange(n)[:, None] + np.arange(n)[None, :]
    t = np.where(s < n, s, index + (s - index) % period)
    return _table_monoid(t, 0, f"C({index},{period})")


def semilattice():
    """The monoid {1, z} with z*z = z."""
    return _table_monoid([[0, 1], [1, 1]], 0, "SL2", labeler=lambda i: "1z"[i])


def dihedral_group(n):
    """Symmetries of the n-gon (order 2n) as a permutation group of degree n."""
    rot = "(" + " ".join(str(i + 1) for i in range(n)) + ")"
    refl = "".join(f"({i + 1} {n - i})" for i in range(n // 2) if i + 1 < n - i)
    return permutation_group(n, [rot, refl or "()"], f"D{n}")


def quaternion_group():
    # elements +-1, +-i, +-j, +-k encoded as 2*unit + sign, units 1, i, j, k = 0..3
    unit_mul = {(0, 0): (0, 1), (1, 1): (0, -1), (2, 2): (0, -1), (3, 3): (0, -1),
                (1, 2): (3, 1), (2, 3): (1, 1), (3, 1): (2, 1),
                (2, 1): (3, -1), (3, 2): (1, -1), (1, 3): (2, -1)}
    for u in range(4):
        unit_mul[(0, u)] = (u, 1)
        unit_mul[(u, 0)] = (u, 1)
    t = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            u, s = unit_mul[(a // 2, b // 2)]
            sign = s * (-1 if a % 2 else 1) * (-1 if b % 2 else 1)
            t[a, b] = 2 * u + (0 if sign > 0 else 1)
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return as_group(_table_monoid(t, 0, "Q8", labeler=lambda i: names[i]))


def direct_product(m1, m2):
    n1, n2 = m1.order, m2.order
    t1, t2 = m1.table, m2.table
    t = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    name = f"{m1.name}x{m2.name}"
    labeler = lambda i: f"({m1.label(i // n2)},{m2.label(i % n2)})"
    m = _table_monoid(t, m1.identity * n2 + m2.identity, name, labeler)
    if m1.is_group and m2.is_group:
        inv = (m1.inverse[:, None] * n2 + m2.inverse[None, :]).ravel()
        return FiniteGroup(m.order, m.identity, m._mul, inv, table=t, name=name, labeler=labeler)
    return m


def opposite(m):
    t = np.ascontiguousarray(m.table.T)
    name = f"{m.name}^op"
    if m.is_group:
        return FiniteGroup(m.order, m.identity, _TableMul(t), m.inverse, table=t, name=name, labeler=m._labeler)
    return _table_monoid(t, m.identity, name, m._labeler)


# ---------------------------------------------------------------------------
# subsets


def mask_to_bits(mask):
    return int.from_bytes(np.packbits(np.asarray(mask, dtype=bool), bitorder="little").tobytes(), "little")


def bits_to_mask(bits, n):
    raw = bits.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n].astype(bool)


@dataclass(frozen=True)
class Subgroup:
    """Subset of an ambient algebra held as a bitset (bit i <=> element i).

    Used for subgroups of groups and submonoids of monoids alike.
    """

    ambient: FiniteMonoid
    members: int

    @classmethod
    def from_mask(cls, ambient, mask):
        return cls(ambient, mask_to_bits(mask))

    @classmethod
    def from_elements(cls, ambient, elements):
        mask = np.zeros(ambient.order, dtype=bool)
        mask[np.asarray(list(elements), dtype=np.int64)] = True
        return cls.from_mask(ambient, mask)

    @property
    def order(self):
        return self.members.bit_count()

    def __len__(self):
        return self.order

    def __contains__(self, i):
        return bool(self.members >> int(i) & 1)

    @cached_property
    def mask(self):
        return bits_to_mask(self.members, self.ambient.order)

    @cached_property
    def elements(self):
        return np.nonzero(self.mask)[0].astype(np.int64)

    def labels(self):
        return [self.ambient.label(i) for i in self.elements]

    @cached_property
    def generators(self):
        """A small generating set, chosen greedily in index order."""
        m = self.ambient
        gens = []
        have = np.zeros(m.order, dtype=bool)
        have[m.identity] = True
        for x in self.elements:
            if not have[x]:
                gens.append(int(x))
                have = _close(m, gens, start=np.nonzero(have)[0])
        return tuple(gens)

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.ambient.name or '?'}>"


def _close(m, gens, start=None):
    """Mask of the closure of ``start`` (default: {1}) under right multiplication by gens."""
    mask = np.zeros(m.order, dtype=bool)
    frontier = np.array([m.identity], dtype=np.int64) if start is None else np.asarray(start, dtype=np.int64)
    mask[frontier] = True
    g = np.asarray(gens, dtype=np.int64)
    if g.size == 0:
        return mask
    while frontier.size:
        prods = m.mul_vec(frontier[:, None], g[None, :]).ravel()
        new = np.unique(prods[~mask[prods]])
        mask[new] = True
        frontier = new
    return mask


def _with_generators(sub, gens):
    sub.__dict__["generators"] = tuple(int(x) for x in gens)
    return sub


def subgroup_generated(g, seeds):
    seeds = [int(s) for s in seeds]
    for s in seeds:
        if not 0 <= s < g.order:
            raise IndexOutOfRange(f"seed {s} out of range", (s,))
    return _with_generators(Subgroup.from_mask(g, _close(g, seeds)), seeds)


def trivial_subgroup(m):
    return _with_generators(Subgroup(m, 1 << m.identity), ())


def whole(m):
    return Subgroup(m, (1 << m.order) - 1)


def is_subgroup(sub):
    """Subgroup (resp. submonoid) invariant: identity, products, and inverses for groups."""
    m = sub.ambient
    if m.identity not in sub:
        return False
    el = sub.elements
    mask = sub.mask
    for chunk in np.array_split(el, max(1, len(el) // 512)):
        if not mask[m.mul_vec(chunk[:, None], el[None, :])].all():
            return False
    if m.is_group and not mask[m.inverse[el]].all():
        return False
    return True


def _extend(m, sub, x):
    gens = list(sub.generators) + [int(x)]
    mask = _close(m, gens, start=sub.elements)
    return _with_generators(Subgroup.from_mask(m, mask), gens)


def sort_key(sub):
    return (sub.order, sub.members)


def all_subgroups(g, cap=None):
    """Every subgroup, found by repeatedly extending known subgroups by one element."""
    cap = config.LIMITS.subgroup_order if cap is None else cap
    if g.order > cap:
        raise OrderTooLarge(f"{g!r} exceeds subgroup enumeration cap {cap}")
    return _extension_search(g, range(g.order), accept=lambda s: True)


def _extension_search(g, candidates, accept, max_order=None):
    triv = trivial_subgroup(g)
    found = {triv.members: triv}
    frontier = [triv]
    candidates = np.asarray(list(candidates), dtype=np.int64)
    while frontier:
        nxt = []
        for h in frontier:
            if max_order is not None and 2 * h.order > max_order:
                continue
            # y in the double coset h x h gives <h, y> = <h, x>
            done = h.mask.copy()
            he = h.elements
            for x in candidates:
                if done[x]:
                    continue
                k = _extend(g, h, x)
                done[g.mul_vec(g.mul_vec(he[:, None], x), he[None, :])] = True
                if k.members in found or not accept(k):
                    continue
                found[k.members] = k
                nxt.append(k)
        frontier = nxt
    return sorted(found.values(), key=sort_key)


def element_orders(g):
    """Order of every element of a group (vectorized repeated multiplication)."""
    idx = np.arange(g.order)
    orders = np.zeros(g.order, dtype=np.int64)
    power = idx.copy()
    for k in range(1, g.order + 1):
        hit = (power == g.identity) & (orders == 0)
        orders[hit] = k
        if orders.all():
            return orders
        power = g.mul_vec(power, idx)
    raise NotAGroup("some element never returns to the identity")


def conjugate_subgroup(g, a, x):
    """The subgroup a x a^-1."""
    if x.ambient is not g:
        raise AmbientMismatch("subgroup lives in a different group")
    el = g.mul_vec(g.mul_vec(a, x.elements), g.inverse[a])
    out = Subgroup.from_elements(g, el)
    if "generators" in x.__dict__:
        gens = g.mul_vec(g.mul_vec(a, list(x.generators)), g.inverse[a]) if x.generators else []
        _with_generators(out, gens)
    return out


def is_normal(g, sub):
    return all(conjugate_subgroup(g, int(a), sub) == sub for a in whole(g).generators)


def units(m):
    if m.is_group:
        return whole(m)
    t = m.table
    e = m.identity
    return Subgroup.from_mask(m, ((t == e) & (t.T == e)).any(axis=1))


def unit_inverse(m, u):
    if m.is_group:
        return int(m.inverse[u])
    t = m.table
    hits = np.nonzero((t[u] == m.identity) & (t[:, u] == m.identity))[0]
    if not hits.size:
        raise NotAGroup(f"{m.label(u)} is not a unit", (int(u),))
    return int(hits[0])


def center(m):
    t = m.table
    return Subgroup.from_mask(m, (t == t.T).all(axis=1))


def is_commutative(m):
    t = m.table
    return bool((t == t.T).all())


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True, eq=False)
class ElementMap:
    """A total function between the carriers of two algebras."""

    domain: FiniteMonoid
    codomain: FiniteMonoid
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64).ravel()
        if len(v) != self.domain.order:
            raise DomainMismatch(f"map has {len(v)} values, domain has {self.domain.order} elements")
        if len(v) and (v.min() < 0 or v.max() >= self.codomain.order):
            bad = int(np.nonzero((v < 0) | (v >= self.codomain.order))[0][0])
            raise IndexOutOfRange(f"value at {bad} outside codomain", (bad,))
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __call__(self, i):
        return int(self.values[i])

    def __len__(self):
        return len(self.values)

    @cached_property
    def key(self):
        return self.values.tobytes()

    def as_tuple(self):
        return tuple(int(v) for v in self.values)

    def same(self, other):
        return (self.domain is other.domain and self.codomain is other.codomain
                and np.array_equal(self.values, other.values))

    def is_injective(self):
        return len(np.unique(self.values)) == len(self.values)

    def image(self):
        return Subgroup.from_elements(self.codomain, self.values)

    def __repr__(self):
        return f"ElementMap({self.domain.name}->{self.codomain.name}, {self.as_tuple()})"


def compose(f, g):
    """f after g."""
    if g.codomain is not f.domain:
        raise DomainMismatch("cannot compose: codomain/domain differ")
    return ElementMap(g.domain, f.codomain, f.values[g.values])


def identity_map(m):
    return ElementMap(m, m, np.arange(m.order))


def constant_map(domain, codomain):
    return ElementMap(domain, codomain, np.full(domain.order, codomain.identity))


def check_homomorphism(f):
    d, c = f.domain, f.codomain
    if f.values[d.identity] != c.identity:
        return False
    v = f.values
    idx = np.arange(d.order)
    for chunk in np.array_split(idx, max(1, d.order // 256)):
        lhs = v[d.mul_vec(chunk[:, None], idx[None, :])]
        rhs = c.mul_vec(v[chunk][:, None], v[None, :])
        if not np.array_equal(lhs, rhs):
            return False
    return True


def restrict(sub):
    """The subgroup/submonoid as an algebra of its own plus its inclusion map."""
    m = sub.ambient
    members = sub.elements
    mul = _InducedMul(m, members)
    ident = int(np.searchsorted(members, m.identity))
    lab = lambda i: m.label(members[i])
    name = f"{m.name}[{sub.order}]"
    if m.is_group:
        inv = np.searchsorted(members, m.inverse[members])
        alg = FiniteGroup(len(members), ident, mul, inv, name=name, labeler=lab)
    else:
        alg = FiniteMonoid(len(members), ident, mul, name=name, labeler=lab)
    return alg, ElementMap(alg, m, members)


def monoid_generators(m):
    """Greedy generating set of m as a monoid."""
    gens = []
    have = np.zeros(m.order, dtype=bool)
    have[m.identity] = True
    for x in range(m.order):
        if not have[x]:
            gens.append(x)
            have = _close(m, gens, start=np.nonzero(have)[0])
    return gens


def enumerate_homomorphisms(k, l, budget=None, image_filter=None):
    """All monoid homomorphisms k -> l.

    Images of a generating set are enumerated (|l|^#gens candidates, checked
    against ``budget``) and extended along the right Cayley graph; every edge
    is checked, which is exactly the homomorphism condition.
    ``image_filter(gen_index, candidate)`` may prune generator images.
    """
    budget = config.LIMITS.map_budget if budget is None else budget
    gens = monoid_generators(k)
    if l.order ** len(gens) > budget:
        raise SearchBudgetExceeded(f"{l.order}^{len(gens)} generator images exceed budget {budget}")
    kt = k.table
    lt = l.table
    # BFS spanning order of k from the identity along generators
    order = [k.identity]
    seen = {k.identity}
    for w in order:
        for g in gens:
            v = int(kt[w, g])
            if v not in seen:
                seen.add(v)
                order.append(v)
    choices = [
        [c for c in range(l.order) if image_filter is None or image_filter(t, c)]
        for t in range(len(gens))
    ]
    out = []
    for imgs in itertools.product(*choices):
        h = np.full(k.order, -1, dtype=np.int64)
        h[k.identity] = l.identity
        ok = True
        for w in order:
            hw = h[w]
            for t, g in enumerate(gens):
                v = kt[w, g]
                val = lt[hw, imgs[t]]
                if h[v] < 0:
                    h[v] = val
                elif h[v] != val:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(ElementMap(k, l, h))
    return out


def find_isomorphism(g, h):
    """An isomorphism g -> h of groups, or None. Generator images are restricted
    to elements of matching order."""
    if g.order != h.order:
        return None
    og, oh = element_orders(g), element_orders(h)
    if sorted(og) != sorted(oh):
        return None
    gens = monoid_generators(g)
    for f in enumerate_homomorphisms(g, h, budget=10**9,
                                     image_filter=lambda t, c: oh[c] == og[gens[t]]):
        if f.is_injective():
            return f
    return None


@dataclass(frozen=True, eq=False)
class Pullback:
    group: FiniteGroup
    proj_k: ElementMap
    proj_l: ElementMap
    kernel: FiniteGroup  # Ker(g) as a group of its own
    kernel_inclusion: ElementMap  # Ker(g) -> L
    iota: ElementMap  # Ker(g) -> pullback, l |-> (1_K, l)


def pullback(f, g):
    """K x_M L = {(k, l) : f(k) = g(l)} with componentwise product."""
    if g.codomain is not f.codomain:
        raise DomainMismatch("f and g must share a codomain")
    for name, h in (("f", f), ("g", g)):
        if not check_homomorphism(h):
            raise NotHomomorphism(f"{name} is not a homomorphism")
    kk, ll = f.domain, g.domain
    nl = ll.order
    pairs = [(a, b) for a in range(kk.order) for b in range(nl) if f.values[a] == g.values[b]]
    pk = np.array([p[0] for p in pairs], dtype=np.int64)
    pl = np.array([p[1] for p in pairs], dtype=np.int64)
    lookup = np.full(kk.order * nl, -1, dtype=np.int64)
    lookup[pk * nl + pl] = np.arange(len(pairs))
    t = lookup[kk.table[pk[:, None], pk[None, :]] * nl + ll.table[pl[:, None], pl[None, :]]]
    ident = int(lookup[kk.identity * nl + ll.identity])
    inv = lookup[kk.inverse[pk] * nl + ll.inverse[pl]]
    labeler = lambda i: f"({kk.label(pk[i])},{ll.label(pl[i])})"
    grp = FiniteGroup(len(pairs), ident, _TableMul(t), inv, table=t,
                      name=f"{kk.name}x_{f.codomain.name}{ll.name}", labeler=labeler)
    ker = Subgroup.from_mask(ll, g.values == g.codomain.identity)
    kalg, kinc = restrict(ker)
    iota = ElementMap(kalg, grp, lookup[kk.identity * nl + ker.elements])
    return Pullback(grp, ElementMap(grp, kk, pk), ElementMap(grp, ll, pl), kalg, kinc, iota)
