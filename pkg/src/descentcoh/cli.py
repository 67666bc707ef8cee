"""descentcoh command line: validate | subgroups | complements | desc1 | fac | h1 | verify.

Exit status 0 on success, 1 on a domain or verification failure, 2 on I/O or
malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import algebra as alg
from . import crosscheck
from . import descent as ds
from . import factorization as fz
from . import nonabelian as na
from .catalog import default_catalog
from .documents import SCHEMA_VERSION, Builder, canonical, load_file
from .errors import AlgebraError, AxiomViolated, SpecError


class Failure(Exception):
    """A computation ran but its answer is a failure (exit 1)."""

    def __init__(self, doc, text):
        super().__init__(text)
        self.doc = doc
        self.text = text


def _selector(args):
    picks = [("gens", args.gens), ("alternating", args.alternating or None),
             ("index", args.index), ("elements", args.elements), ("center", args.center or None)]
    picks = [(k, v) for k, v in picks if v is not None]
    if len(picks) > 1:
        raise SpecError("give at most one subgroup selector")
    if not picks:
        return {"trivial": True}
    k, v = picks[0]
    if k in ("gens", "elements"):
        v = [_element_token(t) for t in v]
    return {k: v}


def _element_token(t):
    return int(t) if t.lstrip("-").isdigit() else t


def _kind(m):
    return "group" if m.is_group else "monoid"


def _elements(m, sub):
    return [m.label(i) for i in sub.elements]


def _set(labels):
    return "{" + ", ".join(labels) + "}"


def _load_algebra(path):
    doc = load_file(path)
    bld = Builder()
    return bld, doc, bld.algebra(doc.get("algebra", doc) if isinstance(doc, dict) else doc)


# ---------------------------------------------------------------------------
# commands; each returns (document, text lines)


def cmd_validate(args):
    doc = load_file(args.spec)
    bld = Builder()
    try:
        if isinstance(doc, dict) and "entries" in doc:
            entries = crosscheck.validate_catalog(doc)
            return {"kind": "catalog", "entries": len(entries)}, [f"catalog with {len(entries)} entries"]
        if isinstance(doc, dict) and "actor" in doc:
            a = bld.action(doc)
            return ({"kind": "action", "actor_order": a.actor.order, "target_order": a.target.order},
                    [f"action of a {_kind(a.actor)} of order {a.actor.order} on a {_kind(a.target)} of order {a.target.order}"])
        m = bld.algebra(doc)
    except (alg.NotAssociative, alg.BadIdentity, alg.IndexOutOfRange, alg.NotHomomorphism) as exc:
        raise Failure({"valid": False, "error": type(exc).__name__, "message": str(exc),
                       "witness": list(exc.witness) if exc.witness else None},
                      f"invalid: {exc} (witness {exc.witness})")
    except AxiomViolated as exc:
        raise Failure({"valid": False, "error": "AxiomViolated", "axiom": exc.axiom,
                       "witness": list(exc.witness)}, f"invalid: {exc}")
    return {"valid": True, "kind": _kind(m), "order": m.order}, [f"{_kind(m)} of order {m.order}"]


def cmd_subgroups(args):
    _, _, g = _load_algebra(args.spec)
    subs = alg.all_subgroups(g)
    doc = {"order": g.order, "subgroups": [{"index": i, "order": s.order, "elements": _elements(g, s)}
                                          for i, s in enumerate(subs)]}
    lines = [f"{len(subs)} subgroups"] + [f"[{i}] order {s.order}: {_set(_elements(g, s))}"
                                          for i, s in enumerate(subs)]
    return doc, lines


def cmd_complements(args):
    bld, _, g = _load_algebra(args.spec)
    b = bld.subgroup(g, _selector(args))
    comps = fz.complements(g, b)
    doc = {"b": _elements(g, b), "complements": [_elements(g, x) for x in comps]}
    if not len(comps):
        return doc, ["no complements"]
    return doc, [f"{len(comps)} complement(s)"] + [_set(_elements(g, x)) for x in comps]


def _cocycle_doc(g, b, iota, c):
    ker = ds.kernel_of_cocycle(c, verify=False)
    return {"q": [int(v) for v in c.q.values], "q_labels": [b.label(v) for v in c.q.values],
            "kernel": _elements(g, ker)}


def cmd_desc1(args):
    bld, spec, g = _load_algebra(args.spec)
    sel = _selector(args)
    sub = bld.subgroup(g, sel)
    b, iota = alg.restrict(sub)
    t0 = time.perf_counter()
    classes = ds.desc1(iota, budget=args.budget)
    elapsed = time.perf_counter() - t0
    doc = {
        "group": spec.get("algebra", spec),
        "select": sel,
        "elements": [g.label(i) for i in range(g.order)] if g.order <= 720 else None,
        "b_elements": [g.label(v) for v in iota.values],
        "cocycles": len(classes.cocycles),
        "classes": [{"size": len(cl), "representative": _cocycle_doc(g, b, iota, classes.cocycles[cl[0]]),
                     "members": [int(i) for i in cl]}
                    for cl in classes.classes],
    }
    if args.timings:
        doc["elapsed"] = round(elapsed, 6)
    lines = [f"|Desc^1| = {len(classes)} ({len(classes.cocycles)} cocycles)"]
    for k, cl in enumerate(classes.classes):
        rep = classes.cocycles[cl[0]]
        lines.append(f"class {k}: {len(cl)} cocycle(s), kernel of representative "
                     f"{_set(_elements(g, ds.kernel_of_cocycle(rep, verify=False)))}"
                     if g.order <= 120 else f"class {k}: {len(cl)} cocycle(s)")
    return doc, lines


def cmd_fac(args):
    _, _, g = _load_algebra(args.spec)
    records = fz.fac(g)
    classes = fz.fac_classes(g, records)
    doc = {"FAC": [{"B": _elements(g, r.b), "X": _elements(g, r.x)} for r in records],
           "Fac": [[int(i) for i in o] for o in classes.orbits],
           "counts": {"FAC": len(records), "Fac": len(classes)}}
    lines = [f"|FAC| = {len(records)}, |Fac| = {len(classes)}"]
    lines += [f"B = {_set(_elements(g, r.b))}, X = {_set(_elements(g, r.x))}" for r in records]
    return doc, lines


def cmd_h1(args):
    bld = Builder()
    spec = load_file(args.spec)
    action = bld.action(spec.get("action", spec))
    classes = na.h1(action, budget=args.budget)
    fixed = na.h0(action)
    b = action.target
    doc = {"H0": _elements(b, fixed),
           "H1": [{"size": len(cl), "representative": [b.label(v) for v in classes.cocycles[cl[0]].q.values]}
                  for cl in classes.classes],
           "counts": {"H0": fixed.order, "H1": len(classes), "Z1": len(classes.cocycles)},
           "base_class": classes.base_class}
    lines = [f"H^0 = {_set(_elements(b, fixed))} (order {fixed.order})",
             f"|H^1| = {len(classes)} ({len(classes.cocycles)} cocycles)"]
    return doc, lines


def cmd_verify(args):
    if args.catalog:
        catalog = load_file(args.catalog)
    elif args.seed_catalog:
        catalog = load_file(args.seed_catalog)
    else:
        catalog = default_catalog()
    records = crosscheck.run_verification_suite(catalog, threads=args.threads, budget=args.budget,
                                                timings=args.timings)
    summary = crosscheck.summarize(records)
    doc = {"summary": summary, "records": records}
    lines = [f"{summary['checks']} checks, {summary['failed']} failed"]
    lines += [f"FAIL {r['instance']} {r['theorem_id']} {json.dumps(r.get('witness'))}"
              for r in records if r["status"] != "pass"]
    if not summary["ok"]:
        raise Failure(doc, "\n".join(lines))
    return doc, lines


def load_desc1(doc):
    """Rebuild (iota, class representatives) from a ``desc1 --format json`` document."""
    result = doc.get("result", doc)
    bld = Builder()
    g = bld.algebra(result["group"])
    b, iota = alg.restrict(bld.subgroup(g, result["select"]))
    reps = [ds.DescentCocycle(iota, alg.ElementMap(g, b, cl["representative"]["q"]))
            for cl in result["classes"]]
    return iota, reps


COMMANDS = {"validate": cmd_validate, "subgroups": cmd_subgroups, "complements": cmd_complements,
            "desc1": cmd_desc1, "fac": cmd_fac, "h1": cmd_h1, "verify": cmd_verify}


def build_parser():
    p = argparse.ArgumentParser(prog="descentcoh", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--budget", type=int, default=None, help="candidate-map budget for brute-force searches")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed-catalog", metavar="PATH", default=None, help="catalog used by verify")
    p.add_argument("--timings", action="store_true", help="include wall-clock times in output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_selector(sp):
        sp.add_argument("--gens", nargs="+", help="generators, cycle notation or indices")
        sp.add_argument("--alternating", action="store_true")
        sp.add_argument("--index", type=int, help="position in the canonical subgroup list")
        sp.add_argument("--elements", nargs="+")
        sp.add_argument("--center", action="store_true")

    sub.add_parser("validate").add_argument("spec")
    sub.add_parser("subgroups").add_argument("spec")
    for name in ("complements", "desc1"):
        sp = sub.add_parser(name)
        sp.add_argument("spec")
        with_selector(sp)
    sub.add_parser("fac").add_argument("spec")
    sub.add_parser("h1").add_argument("spec")
    sub.add_parser("verify").add_argument("catalog", nargs="?")
    return p


def _emit(args, command, doc, lines, ok, out):
    if args.format == "json":
        full = {"schema_version": SCHEMA_VERSION, "command": command, "ok": ok, "result": doc}
        out.write(canonical(full) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, lines = COMMANDS[args.command](args)
    except Failure as f:
        _emit(args, args.command, f.doc, f.text.splitlines(), False, out)
        return 1
    except (OSError, SpecError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except AlgebraError as exc:
        witness = f" (witness {exc.witness})" if exc.witness is not None else ""
        _emit(args, args.command, {"error": type(exc).__name__, "message": str(exc)},
              [f"{type(exc).__name__}: {exc}{witness}"], False, out)
        return 1
    _emit(args, args.command, doc, lines, True, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
