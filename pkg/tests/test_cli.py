import json

from nervelab import cat2
from nervelab.cli import (
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_INPUT,
    EXIT_OK,
    VerificationReport,
    main,
)
from nervelab.theta import SimplexMap, delta, m_n_map, morphism, morphism_to_json, node


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_oriental_dump(capsys):
    code, out, _ = run(capsys, "oriental", "2")
    assert code == EXIT_OK
    assert out.strip()
    code, out, _ = run(capsys, "oriental", "2", "--json")
    assert json.loads(out)["ranks"] == [3, 3, 1]


def test_theta_commands(capsys):
    assert run(capsys, "theta", "counts", "(Δ3; Δ3, Δ0, Δ2)")[1].split() == ["4", "8", "5"]
    assert json.loads(run(capsys, "--json", "theta", "counts", "(D2; D3, D3)")[1]) == [3, 8, 6]
    assert run(capsys, "theta", "dual", "(Δ2; Δ1, Δ0)", "--J", "1")[1].strip() == "(Δ2; Δ0, Δ1)"
    code, _, err = run(capsys, "theta", "counts", "(Δ2; Δ1)")
    assert code == EXIT_INPUT and "children" in err


def test_theta_compose(capsys, tmp_path):
    A, B, C = node(1), node(1, 0), node(2)
    f = morphism(A, B, (0, 2), {(1, 1): m_n_map(SimplexMap.identity(1)),
                               (1, 2): morphism(delta(1), node(), (0, 0))})
    g = morphism(B, C, (0, 1, 1), {(1, 1): m_n_map(SimplexMap(1, 2, (0, 2)))})
    (tmp_path / "f.json").write_text(json.dumps(morphism_to_json(f)))
    (tmp_path / "g.json").write_text(json.dumps(morphism_to_json(g)))
    code, out, _ = run(capsys, "theta", "compose", str(tmp_path / "g.json"), str(tmp_path / "f.json"))
    assert code == EXIT_OK
    assert json.loads(out)["phi"] == [0, 1]
    code, _, _ = run(capsys, "theta", "compose", str(tmp_path / "f.json"), str(tmp_path / "g.json"))
    assert code == EXIT_INPUT


def test_export_validate_nerve_homology(capsys, tmp_path):
    path = tmp_path / "c.json"
    assert run(capsys, "cat2", "export", "--example", "hollow-triangle", "--out", str(path))[0] == EXIT_OK
    code, out, _ = run(capsys, "cat2", "validate", "--input", str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {"valid": True, "cells": [3, 7, 7], "loop_free": True}
    chains = tmp_path / "chains.json"
    code, out, _ = run(capsys, "nerve", "street", "--input", str(path), "--dmax", "3", "--out", str(chains))
    assert code == EXIT_OK and json.loads(out)["valid_range"] == 2
    code, out, _ = run(capsys, "--json", "homology", "--in", str(chains))
    assert code == EXIT_OK
    assert json.loads(out)["betti"][:2] == [1, 1]


def test_realize_with_duality(capsys, tmp_path):
    path = tmp_path / "d.json"
    assert run(capsys, "cat2", "realize", "(Δ2; Δ1, Δ0)", "--J", "1", "--out", str(path))[0] == EXIT_OK
    assert cat2.are_isomorphic(cat2.load(path), cat2.realize2(node(0, 1)))


def test_nerve_kinds_agree(capsys):
    outs = [run(capsys, "nerve", k, "--example", "oriental2", "--dmax", "3")[1] for k in ("street", "diag", "multi")]
    assert all(json.loads(o)["ranks"][0] == 3 for o in outs)


def test_bad_inputs(capsys, tmp_path):
    assert run(capsys, "cat2", "validate", "--example", "nope")[0] == EXIT_INPUT
    assert run(capsys, "cat2", "validate")[0] == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "cat2", "validate", "--input", str(bad))[0] == EXIT_INPUT
    assert run(capsys, "homology", "--in", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    assert run(capsys, "cat2", "export", "--example", "point", "--J", "3")[0] == EXIT_INPUT


def test_broken_table_rejected(capsys, tmp_path):
    data = json.loads(cat2.dumps(cat2.oriental2()))
    key = next(iter(data["hcomp"]))
    data["hcomp"][key]["objects"][0][2] = "02"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "cat2", "validate", "--input", str(path))
    assert code == EXIT_INPUT and "invalid" in err


def test_verify_homotopy(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "homotopy", "--nmax", "4", "--json")
    assert code == EXIT_OK
    assert [r["status"] for r in records(out)] == ["pass"] * 5
    code, out, _ = run(capsys, "verify", "homotopy", "--nmax", "3", "--perturb", "--seed", "5", "--json")
    assert code == EXIT_FAIL
    failed = [r for r in records(out) if r["status"] == "fail"]
    assert len(failed) == 3 and all(r["outputs"]["witness"] for r in failed)
    dump = tmp_path / "o3.txt"
    dump.write_text(run(capsys, "oriental", "3")[1])
    assert run(capsys, "verify", "homotopy", "--input", str(dump))[0] == EXIT_OK


def test_verify_compare_and_duality(capsys):
    code, out, _ = run(capsys, "verify", "compare-nerves", "--example", "parallel-fillers", "--json")
    assert code == EXIT_OK
    recs = records(out)
    assert [r["check"] for r in recs] == ["diagonal=total", "street=diagonal"]
    assert recs[1]["outputs"]["street"] == [1, 0, 1, 0]
    code, out, _ = run(capsys, "verify", "duality", "--theta", "(Δ2; Δ1, Δ0)", "--json")
    assert code == EXIT_OK and len(records(out)) == 4
    code, out, _ = run(capsys, "verify", "duality", "--example", "oriental2", "--J", "2")
    assert code == EXIT_OK and "1/1 checks passed" in out


def test_verify_pu_sc(capsys, tmp_path):
    T = tmp_path / "T.json"
    T.write_text(cat2.dumps(cat2.realize2(delta(1))))
    code, out, _ = run(capsys, "verify", "pu-sc", "--example", "oriental2", "--T", str(T), "--json")
    assert code == EXIT_OK
    # p = 1: 2-functors from the 2-disc are the 8 two-cells of oriental2
    assert [(r["outputs"]["hom_T_SpC"], r["outputs"]["hom_wreath_C"]) for r in records(out)] == \
        [(3, 3), (8, 8), (14, 14)]
    disc = tmp_path / "two.json"
    disc.write_text(cat2.dumps(cat2.disjoint_points()))
    assert run(capsys, "verify", "pu-sc", "--example", "oriental2", "--T", str(disc))[0] == EXIT_INPUT
    code, _, err = run(capsys, "verify", "pu-sc", "--theta", "(Δ3; Δ3, Δ0, Δ2)", "--T", str(T), "--budget", "20")
    assert code == EXIT_BUDGET and "budget" in err


def test_budget_env(capsys, tmp_path, monkeypatch):
    T = tmp_path / "T.json"
    T.write_text(cat2.dumps(cat2.realize2(delta(1))))
    monkeypatch.setenv("NERVELAB_BUDGET", "5")
    assert run(capsys, "verify", "pu-sc", "--example", "oriental2", "--T", str(T))[0] == EXIT_BUDGET


def _functor_file(tmp_path, name, A, B, bijective):
    for F in cat2.enumerate_2functors(A, B):
        if (len(set(F.obj_map.values())) == len(A.objects)) == bijective:
            path = tmp_path / name
            path.write_text(cat2.dumps(F))
            return path
    raise AssertionError("no such 2-functor")


def test_verify_dwyer_kan(capsys, tmp_path):
    O = cat2.oriental2()
    iso = _functor_file(tmp_path, "iso.json", O, O, True)
    code, out, _ = run(capsys, "verify", "dwyer-kan", "--input", str(iso), "--json")
    assert code == EXIT_OK and len(records(out)) == 3
    # crush the 2-cell: homs stay contractible, so the hypotheses hold
    collapse = _functor_file(tmp_path, "collapse.json", O, cat2.realize2(delta(2)), True)
    assert run(capsys, "verify", "dwyer-kan", "--input", str(collapse))[0] == EXIT_OK
    squash = _functor_file(tmp_path, "squash.json", O, cat2.realize2(delta(1)), False)
    code, out, _ = run(capsys, "verify", "dwyer-kan", "--input", str(squash), "--json")
    assert code == EXIT_FAIL
    assert records(out)[-1]["check"] == "objects bijective"
    assert run(capsys, "verify", "dwyer-kan", "--input", str(tmp_path / "iso.json.missing"))[0] == EXIT_INPUT


def test_report_jsonl_round_trip():
    rep = VerificationReport("demo")
    rep.add("b", True, {"x": 1}, {"y": [1, 2]}, 0.5)
    rep.add("a", False)
    back = VerificationReport.from_jsonl(rep.to_jsonl())
    assert back == rep
    assert [r.check for r in rep.canonical().records] == ["a", "b"]
    assert not rep.ok
    assert "1/2 checks passed" in rep.summary()


def test_global_flags_anywhere(capsys):
    a = run(capsys, "--json", "theta", "counts", "(Δ1; Δ1)")[1]
    b = run(capsys, "theta", "counts", "(Δ1; Δ1)", "--json")[1]
    assert a == b == "[2, 2, 1]\n"
