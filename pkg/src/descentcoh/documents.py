"""JSON-shaped input documents: algebras, maps, actions, subgroup selectors and
verification catalogs.

Building is memoized on the canonical form of each spec, so two references to
the same algebra inside one document resolve to the same object.
"""
from __future__ import annotations

import json

import numpy as np

from . import algebra as alg
from .errors import AlgebraError, SpecError
from .nonabelian import semidirect, trivial_action, validate_action

SCHEMA_VERSION = 1


def canonical(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}")


def load_file(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _need(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise SpecError(f"missing field {key!r} in {doc!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise SpecError(f"field {key!r} has the wrong type")
    return v


def _int(doc, key):
    v = _need(doc, key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"field {key!r} must be an integer")
    return v


class Builder:
    def __init__(self):
        self._cache = {}

    def _memo(self, tag, doc, make):
        key = (tag, canonical(doc))
        if key not in self._cache:
            self._cache[key] = make(doc)
        return self._cache[key]

    # -- algebras ------------------------------------------------------------

    def algebra(self, doc):
        return self._memo("algebra", doc, self._algebra)

    def _algebra(self, doc):
        kind = _need(doc, "kind", str)
        if kind == "table":
            n = _int(doc, "n")
            m = alg.validate_monoid(n, _need(doc, "mul", list), _int(doc, "one"), doc.get("name", f"T{n}"))
            labels = doc.get("labels")
            if labels is not None:
                if len(labels) != n:
                    raise SpecError("labels must list every element")
                m._labeler = lambda i, labels=tuple(labels): str(labels[i])
            try:
                return alg.as_group(m)
            except alg.NotAGroup:
                return m
        if kind == "perm":
            gens = _need(doc, "generators", list)
            return alg.permutation_group(_int(doc, "degree"), gens, doc.get("name", ""))
        if kind == "cyclic":
            return alg.cyclic_group(_int(doc, "n"))
        if kind == "symmetric":
            return alg.symmetric_group(_int(doc, "n"))
        if kind == "dihedral":
            return alg.dihedral_group(_int(doc, "n"))
        if kind == "quaternion":
            return alg.quaternion_group()
        if kind == "semilattice":
            return alg.semilattice()
        if kind == "cyclic-monoid":
            return alg.cyclic_monoid(_int(doc, "index"), _int(doc, "period"))
        if kind == "product":
            f1, f2 = _need(doc, "factors", list)
            return alg.direct_product(self.algebra(f1), self.algebra(f2))
        if kind == "semidirect":
            return semidirect(self.action(_need(doc, "action"))).algebra
        if kind == "subgroup":
            return self.restricted(_need(doc, "of"), _need(doc, "select"))[0]
        if kind == "pullback":
            return self.pullback(doc).group
        raise SpecError(f"unknown algebra kind {kind!r}")

    def restricted(self, of, select):
        """(subalgebra, inclusion) for a selector, shared across the document."""
        return self._memo("restrict", {"of": of, "select": select},
                          lambda d: alg.restrict(self.subgroup(self.algebra(of), select)))

    def pullback(self, doc):
        return self._memo("pullback", doc, lambda d: alg.pullback(self.map(_need(d, "f")), self.map(_need(d, "g"))))

    # -- subgroups -----------------------------------------------------------

    def subgroup(self, m, sel):
        if not isinstance(sel, dict) or len(sel) != 1:
            raise SpecError(f"a selector has exactly one key, got {sel!r}")
        (key, val), = sel.items()
        if key == "gens":
            return alg.subgroup_generated(m, [self.element(m, g) for g in val])
        if key == "alternating":
            return alg.alternating_subgroup(m)
        if key == "index":
            subs = alg.all_subgroups(m)
            if not 0 <= val < len(subs):
                raise SpecError(f"subgroup index {val} out of range 0..{len(subs) - 1}")
            return subs[val]
        if key == "elements":
            return alg.Subgroup.from_elements(m, [self.element(m, e) for e in val])
        if key == "center":
            return alg.center(m)
        if key == "trivial":
            return alg.trivial_subgroup(m)
        if key == "whole":
            return alg.whole(m)
        raise SpecError(f"unknown selector {key!r}")

    def element(self, m, e):
        if isinstance(e, str):
            return m.index_of(e)
        if isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < m.order:
            raise SpecError(f"bad element reference {e!r}")
        return e

    # -- maps ----------------------------------------------------------------

    def map(self, doc):
        return self._memo("map", doc, self._map)

    def _map(self, doc):
        recipe = doc.get("recipe", "values")
        if recipe in ("projection-B", "projection-X", "embedding-B", "embedding-X"):
            prod = semidirect(self.action(_need(doc, "action")))
            return {"projection-B": prod.p_b, "projection-X": prod.p_x,
                    "embedding-B": prod.iota_b, "embedding-X": prod.iota_x}[recipe]
        if recipe == "inclusion":
            return self.restricted(_need(doc, "codomain"), _need(doc, "select"))[1]
        if recipe == "kernel-inclusion":
            return self.pullback(_need(doc, "pullback")).iota
        dom = self.algebra(_need(doc, "domain"))
        cod = self.algebra(_need(doc, "codomain"))
        if recipe == "values":
            return alg.ElementMap(dom, cod, [self.element(cod, v) for v in _need(doc, "values", list)])
        if recipe == "zero":
            return alg.constant_map(dom, cod)
        if recipe == "identity":
            if dom is not cod:
                raise SpecError("identity needs domain == codomain")
            return alg.identity_map(dom)
        if recipe == "sign":
            if cod.order != 2:
                raise SpecError("sign lands in a group of order 2")
            other = 1 - cod.identity
            return alg.ElementMap(dom, cod, np.where(alg.permutation_parity(dom) == 1, other, cod.identity))
        raise SpecError(f"unknown map recipe {recipe!r}")

    # -- actions -------------------------------------------------------------

    def action(self, doc):
        return self._memo("action", doc, self._action)

    def _action(self, doc):
        x = self.algebra(_need(doc, "actor"))
        b = self.algebra(_need(doc, "target"))
        rule = doc.get("rule", "table")
        if rule == "table":
            star = [[self.element(b, v) for v in row] for row in _need(doc, "star", list)]
            return validate_action(x, b, np.asarray(star, dtype=np.int64))
        if rule == "trivial":
            return trivial_action(x, b)
        # the named rules let the non-identity elements act by one fixed endomorphism
        idx = np.arange(b.order)
        if rule == "inversion":
            if not b.is_group:
                raise SpecError("inversion needs a group target")
            endo = b.inverse
        elif rule == "swap":
            n = int(round(b.order ** 0.5))
            endo = (idx % n) * n + idx // n
        elif rule == "collapse":
            endo = np.full(b.order, b.identity)
        else:
            raise SpecError(f"unknown action rule {rule!r}")
        star = np.tile(idx, (x.order, 1))
        star[np.arange(x.order) != x.identity] = endo
        return validate_action(x, b, star)


def build_algebra(doc):
    return Builder().algebra(doc)


def build_action(doc):
    return Builder().action(doc)


def validate_catalog(doc):
    if not isinstance(doc, dict):
        raise SpecError("catalog must be an object")
    if doc.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise SpecError(f"unsupported schema_version {doc.get('schema_version')!r}")
    entries = _need(doc, "entries", list)
    names = [_need(e, "name", str) for e in entries]
    for e in entries:
        _need(e, "type", str)
    if len(set(names)) != len(names):
        raise SpecError("catalog entry names must be unique")
    return entries


def roundtrip(doc):
    """Parse then re-serialize; a canonical document comes back byte-identical."""
    return canonical(loads(canonical(doc)))


__all__ = ["Builder", "SCHEMA_VERSION", "canonical", "loads", "load_file", "build_algebra",
           "build_action", "validate_catalog", "roundtrip", "AlgebraError"]
