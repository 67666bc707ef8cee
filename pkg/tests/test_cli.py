import io
import json
from pathlib import Path

import pytest

from descentcoh import descent as ds
from descentcoh.cli import load_desc1, main
from descentcoh.documents import Builder, canonical, loads, roundtrip, validate_catalog
from descentcoh.errors import SpecError

GOLDEN = Path(__file__).parent / "golden"

S3_TABLE = {"kind": "table", "n": 6, "one": 0,
            "mul": [[0, 1, 2, 3, 4, 5], [1, 0, 3, 2, 5, 4], [2, 4, 0, 5, 1, 3],
                    [3, 5, 1, 4, 0, 2], [4, 2, 5, 0, 3, 1], [5, 3, 4, 1, 2, 0]]}


def run(args, tmp_path=None, **files):
    paths = {}
    for name, doc in files.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc), encoding="utf-8")
        paths[name] = str(p)
    argv = [paths.get(a, a) for a in args]
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


# --- documents ------------------------------------------------------------------

def test_canonical_roundtrip_is_byte_identical():
    doc = {"kind": "product", "factors": [{"n": 2, "kind": "cyclic"}, {"kind": "symmetric", "n": 3}],
           "name": "Z2 × S3"}
    text = canonical(doc)
    assert roundtrip(doc) == text
    assert roundtrip(loads(text)) == text
    assert canonical(loads(json.dumps(doc, indent=4))) == text


def test_builder_shares_objects_and_rejects_bad_specs():
    bld = Builder()
    a = bld.algebra({"kind": "symmetric", "n": 3})
    assert bld.algebra({"n": 3, "kind": "symmetric"}) is a
    with pytest.raises(SpecError):
        bld.algebra({"kind": "lie"})
    with pytest.raises(SpecError):
        bld.algebra({"kind": "cyclic"})
    with pytest.raises(SpecError):
        bld.subgroup(a, {"gens": ["(1 2)"], "center": True})
    with pytest.raises(SpecError):
        bld.subgroup(a, {"index": 99})
    with pytest.raises(SpecError):
        loads("{not json")
    with pytest.raises(SpecError):
        validate_catalog({"schema_version": 2, "entries": []})


def test_table_and_perm_specs_agree():
    bld = Builder()
    t = bld.algebra(S3_TABLE)
    assert t.is_group and t.order == 6
    p = bld.algebra({"kind": "perm", "degree": 3, "generators": ["(1 2)", "(1 2 3)"]})
    assert p.order == 6
    m = bld.map({"recipe": "sign", "domain": {"kind": "symmetric", "n": 3}, "codomain": {"kind": "cyclic", "n": 2}})
    assert m.as_tuple() == (0, 1, 1, 0, 0, 1)


# --- validate ---------------------------------------------------------------------

def test_validate_exit_codes(tmp_path):
    code, out, _ = run(["validate", "s3"], tmp_path, s3=S3_TABLE)
    assert code == 0 and "group of order 6" in out
    bad = {"kind": "table", "n": 3, "one": 0, "mul": [[0, 1, 2], [1, 2, 0], [2, 0, 0]]}
    code, out, _ = run(["--format", "json", "validate", "bad"], tmp_path, bad=bad)
    doc = json.loads(out)
    assert code == 1 and not doc["ok"] and doc["result"]["error"] == "NotAssociative"
    i, j, k = doc["result"]["witness"]
    t = bad["mul"]
    assert t[t[i][j]][k] != t[i][t[j][k]]
    code, _, err = run(["validate", str(tmp_path / "missing.json")])
    assert code == 2 and "error" in err
    (tmp_path / "garbage.json").write_text("{", encoding="utf-8")
    assert run(["validate", str(tmp_path / "garbage.json")])[0] == 2


def test_validate_action_reports_axiom(tmp_path):
    act = {"actor": {"kind": "cyclic", "n": 2}, "target": {"kind": "cyclic", "n": 3}, "star": [[0, 1, 2], [1, 2, 0]]}
    code, out, _ = run(["--format", "json", "validate", "act"], tmp_path, act=act)
    assert code == 1 and json.loads(out)["result"]["axiom"] == "iii"


# --- complements, desc1, fac, h1 -----------------------------------------------------

def test_complements_examples(tmp_path):
    s3 = {"kind": "symmetric", "n": 3}
    code, out, _ = run(["complements", "s3", "--gens", "(1 2)"], tmp_path, s3=s3)
    assert code == 0 and "{(), (1 2 3), (1 3 2)}" in out
    code, out, _ = run(["complements", "z4", "--elements", "0", "2"], tmp_path, z4={"kind": "cyclic", "n": 4})
    assert code == 0 and "no complements" in out
    code, out, _ = run(["--format", "json", "complements", "s3"], tmp_path, s3=s3)
    assert json.loads(out)["result"]["complements"] == [["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]]
    assert run(["complements", "s3", "--gens", "(1 2)", "--alternating"], tmp_path, s3=s3)[0] == 2


@pytest.mark.parametrize("n,sel,count", [(3, ["--gens", "(1 2)"], 1), (3, ["--alternating"], 1),
                                         (6, ["--alternating"], 2)])
def test_desc1_counts(tmp_path, n, sel, count):
    code, out, _ = run(["desc1", "g", *sel], tmp_path, g={"kind": "symmetric", "n": n})
    assert code == 0 and out.startswith(f"|Desc^1| = {count} ")


def test_desc1_json_reparses_into_cocycles(tmp_path):
    code, out, _ = run(["--format", "json", "desc1", "s4", "--index", "5"], tmp_path, s4={"kind": "symmetric", "n": 4})
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1 and doc["command"] == "desc1"
    iota, reps = load_desc1(doc)
    assert len(reps) == len(doc["result"]["classes"])
    for i, c in enumerate(reps):
        assert ds.is_left_cocycle(iota, c.q)
        ker = ds.kernel_of_cocycle(c)
        assert [iota.codomain.label(v) for v in ker.elements] == doc["result"]["classes"][i]["representative"]["kernel"]
        assert ds.cocycle_from_complement(iota, ker).q.same(c.q)
        for j in range(i):
            assert ds.cocycles_equivalent(c, reps[j]) is None


def test_fac_examples(tmp_path):
    code, out, _ = run(["fac", "g"], tmp_path, g={"kind": "symmetric", "n": 3})
    assert code == 0 and out.startswith("|FAC| = 6, |Fac| = 4")
    for n in (4, 5):
        code, out, _ = run(["--format", "json", "fac", "g"], tmp_path, g={"kind": "cyclic", "n": n})
        assert json.loads(out)["result"]["counts"] == {"FAC": 0, "Fac": 0}


def test_h1_examples(tmp_path):
    inv = {"actor": {"kind": "cyclic", "n": 2}, "target": {"kind": "cyclic", "n": 3}, "rule": "inversion"}
    code, out, _ = run(["--format", "json", "h1", "a"], tmp_path, a=inv)
    res = json.loads(out)["result"]
    assert code == 0 and res["H0"] == ["0"] and res["counts"]["H1"] == 1
    triv = {"actor": {"kind": "cyclic", "n": 2}, "target": {"kind": "cyclic", "n": 2}, "rule": "trivial"}
    assert json.loads(run(["--format", "json", "h1", "a"], tmp_path, a=triv)[1])["result"]["counts"]["H1"] == 2
    one = {"actor": {"kind": "cyclic", "n": 1}, "target": {"kind": "symmetric", "n": 3}, "rule": "trivial"}
    assert json.loads(run(["--format", "json", "h1", "a"], tmp_path, a=one)[1])["result"]["counts"]["H1"] == 1


# --- verify -------------------------------------------------------------------------

def test_verify_empty_and_faulty_catalogs(tmp_path):
    code, out, _ = run(["--format", "json", "verify", "cat"], tmp_path, cat={"schema_version": 1, "entries": []})
    assert code == 0 and json.loads(out)["result"]["records"] == []
    iota = {"recipe": "inclusion", "codomain": {"kind": "symmetric", "n": 3}, "select": {"gens": ["(1 2)"]}}
    fault = {"entries": [{"name": "fault", "type": "cocycle", "iota": iota, "q": [0, 0, 1, 0, 0, 1]}]}
    code, out, _ = run(["verify", "cat"], tmp_path, cat=fault)
    assert code == 1 and "FAIL fault left_cocycle_laws" in out
    code, _, _ = run(["--seed-catalog", "cat", "verify"], tmp_path, cat=fault)
    assert code == 1


def test_verify_small_catalog_passes(tmp_path):
    cat = {"entries": [{"name": "S3", "type": "group", "algebra": {"kind": "symmetric", "n": 3}}]}
    code, out, _ = run(["--threads", "2", "verify", "cat"], tmp_path, cat=cat)
    assert code == 0 and out.endswith("0 failed\n")


# --- determinism and golden files -------------------------------------------------------

GOLDEN_CASES = {
    "desc1_s3_s2": (["desc1", "spec", "--gens", "(1 2)"], {"kind": "symmetric", "n": 3}),
    "fac_s3": (["fac", "spec"], {"kind": "symmetric", "n": 3}),
    "h1_inversion_z3": (["h1", "spec"], {"actor": {"kind": "cyclic", "n": 2}, "target": {"kind": "cyclic", "n": 3},
                                         "rule": "inversion"}),
    "complements_s3_a3": (["complements", "spec", "--alternating"], {"kind": "symmetric", "n": 3}),
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_json_output_matches_golden_and_is_deterministic(tmp_path, name):
    args, spec = GOLDEN_CASES[name]
    first = run(["--format", "json", *args], tmp_path, spec=spec)
    second = run(["--format", "json", *args], tmp_path, spec=spec)
    assert first == second and first[0] == 0
    assert first[1] == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")
