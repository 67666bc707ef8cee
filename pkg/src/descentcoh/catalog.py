"""The default verification catalog, written in the input document format."""
from __future__ import annotations

from .documents import SCHEMA_VERSION

Z = lambda n: {"kind": "cyclic", "n": n}
S3 = {"kind": "symmetric", "n": 3}
S4 = {"kind": "symmetric", "n": 4}
V4 = {"kind": "product", "factors": [Z(2), Z(2)]}
A4 = {"kind": "perm", "degree": 4, "generators": ["(1 2 3)", "(1 2)(3 4)"], "name": "A4"}
D4 = {"kind": "dihedral", "n": 4}
Q8 = {"kind": "quaternion"}
SL = {"kind": "semilattice"}
C12 = {"kind": "cyclic-monoid", "index": 1, "period": 2}  # x^3 = x

INVERSION_23 = {"actor": Z(2), "target": Z(3), "rule": "inversion"}
Z3_RTIMES_Z2 = {"kind": "semidirect", "action": INVERSION_23}


def _group_entries():
    out = [{"name": f"group/Z{n}", "type": "group", "algebra": Z(n)} for n in range(1, 13)]
    for name, doc in [("Z2xZ2", V4), ("S3", S3), ("S4", S4), ("D4", D4), ("Q8", Q8),
                      ("A4", A4), ("Z3:Z2", Z3_RTIMES_Z2)]:
        out.append({"name": f"group/{name}", "type": "group", "algebra": doc})
    return out


def _monoid_entries():
    targets = [Z(2), Z(4), S3]
    return [
        {"name": "monoid/semilattice", "type": "monoid", "algebra": SL, "targets": targets},
        {"name": "monoid/x3=x", "type": "monoid", "algebra": C12, "targets": targets},
    ]


def _action_entries():
    acts = [
        ("trivial Z2 on Z2", {"actor": Z(2), "target": Z(2), "rule": "trivial"}),
        ("trivial Z2 on Z3", {"actor": Z(2), "target": Z(3), "rule": "trivial"}),
        ("trivial Z3 on Z2", {"actor": Z(3), "target": Z(2), "rule": "trivial"}),
        ("trivial Z1 on S3", {"actor": Z(1), "target": S3, "rule": "trivial"}),
        ("trivial Z2 on S3", {"actor": Z(2), "target": S3, "rule": "trivial"}),
        ("swap Z2 on Z2xZ2", {"actor": Z(2), "target": V4, "rule": "swap"}),
        ("trivial semilattice on Z2", {"actor": SL, "target": Z(2), "rule": "trivial"}),
        ("collapse semilattice on Z3", {"actor": SL, "target": Z(3), "rule": "collapse"}),
        ("trivial Z2 on semilattice", {"actor": Z(2), "target": SL, "rule": "trivial"}),
        ("x3=x inverting Z3", {"actor": C12, "target": Z(3), "star": [[0, 1, 2], [0, 2, 1], [0, 1, 2]]}),
    ]
    acts += [(f"inversion Z2 on Z{n}", {"actor": Z(2), "target": Z(n), "rule": "inversion"})
             for n in range(3, 9)]
    return [{"name": f"action/{name}", "type": "action", "action": a} for name, a in acts]


def _conjugation_entries():
    splits = [
        ("S3=A3:Z2", S3, {"alternating": True}, {"gens": ["(1 2)"]}),
        ("S4=V4:S3", S4, {"gens": ["(1 2)(3 4)", "(1 3)(2 4)"]}, {"gens": ["(1 2)", "(1 2 3)"]}),
        ("A4=V4:Z3", A4, {"gens": ["(1 2)(3 4)", "(1 3)(2 4)"]}, {"gens": ["(1 2 3)"]}),
        ("D4=Z4:Z2", D4, {"gens": ["(1 2 3 4)"]}, {"gens": ["(1 4)(2 3)"]}),
    ]
    return [{"name": f"conjugation/{n}", "type": "conjugation", "algebra": a, "normal": b, "complement": x}
            for n, a, b, x in splits]


def _inclusion(codomain, select):
    return {"recipe": "inclusion", "codomain": codomain, "select": select}


def _central_entries():
    sl_z2 = {"kind": "product", "factors": [SL, Z(2)]}
    maps = [
        ("Z2 first factor of Z2xZ2", {"domain": Z(2), "codomain": V4, "values": [0, 2]}),
        ("Z2 in Z4", {"domain": Z(2), "codomain": Z(4), "values": [0, 2]}),
        ("Z3 in Z6", {"domain": Z(3), "codomain": Z(6), "values": [0, 2, 4]}),
        ("Z2 in Z6", {"domain": Z(2), "codomain": Z(6), "values": [0, 3]}),
        ("trivial in S3", _inclusion(S3, {"trivial": True})),
        ("center of Q8", _inclusion(Q8, {"center": True})),
        ("center of D4", _inclusion(D4, {"center": True})),
        ("semilattice in semilattice x Z2", {"domain": SL, "codomain": sl_z2, "values": [0, 2]}),
    ]
    return [{"name": f"central/{n}", "type": "central", "iota": m} for n, m in maps]


def _hom(dom, cod, values=None, recipe=None):
    doc = {"domain": dom, "codomain": cod}
    if recipe:
        doc["recipe"] = recipe
    else:
        doc["values"] = values
    return doc


def _pullback_entries():
    one = Z(1)
    inst = [
        ("Klein four", _hom(Z(2), one, recipe="zero"), _hom(Z(2), one, recipe="zero")),
        ("diagonal Z2", _hom(Z(2), Z(2), recipe="identity"), _hom(Z(2), Z(2), recipe="identity")),
        ("Z3 and Z2 over trivial", _hom(Z(3), one, recipe="zero"), _hom(Z(2), one, recipe="zero")),
        ("Z2 over sign of S3", _hom(Z(2), Z(2), recipe="identity"), _hom(S3, Z(2), recipe="sign")),
        ("S3 and S3 over sign", _hom(S3, Z(2), recipe="sign"), _hom(S3, Z(2), recipe="sign")),
        ("Z4 and Z2xZ2 over Z2", _hom(Z(4), Z(2), [0, 1, 0, 1]), _hom(V4, Z(2), [0, 0, 1, 1])),
        ("Q8 and Z2 over trivial", _hom(Q8, one, recipe="zero"), _hom(Z(2), one, recipe="zero")),
        ("D4 and Z4 over Z2", _hom(D4, Z(2), recipe="sign"), _hom(Z(4), Z(2), [0, 1, 0, 1])),
        ("Z2 over trivial image", _hom(Z(2), Z(2), recipe="identity"), _hom(one, Z(2), recipe="zero")),
    ]
    return [{"name": f"pullback/{n}", "type": "pullback", "f": f, "g": g} for n, f, g in inst]


def default_catalog():
    entries = (_group_entries() + _monoid_entries() + _action_entries() + _conjugation_entries()
               + _central_entries() + _pullback_entries())
    return {"schema_version": SCHEMA_VERSION, "entries": entries}
