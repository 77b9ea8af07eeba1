import json
from pathlib import Path


from etrinb.cli import main
from etrinb.fixtures import TWO_PROFILE_MINIMAL, TWO_PROFILE_STEP_MINIMAL
from etrinb.io import load_model, read_alternatives, read_partition
from etrinb.representations import verify_equivalence

MODELS = Path(__file__).resolve().parent.parent / "models"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_sort_full_space(capsys, tmp_path):
    out_csv = tmp_path / "assigned.csv"
    code, out, _ = run(capsys, "sort", MODELS / "two_profile_electre3.json", "--full-space", "-o", out_csv)
    assert code == 0
    lines = out_csv.read_text().strip().splitlines()
    assert len(lines) == 9262
    assert "9261 alternatives" in out


def test_sort_alternatives_file(capsys):
    code, out, _ = run(capsys, "sort", MODELS / "sum_rule_single_profile.json", MODELS / "sum_rule_alternatives.csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 126
    assert sum(r.endswith(",A") for r in rows) == 32


def test_sort_rejects_bad_weights(capsys, tmp_path):
    doc = json.loads((MODELS / "sum_rule_single_profile.json").read_text())
    doc["weights"] = ["1/2", "1/2", "1/2"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "sort", bad, "--full-space")
    assert code == 2
    assert "weights" in err


def test_analyze_sum_rule(capsys):
    code, out, _ = run(capsys, "analyze", MODELS / "sum_rule.csv")
    assert code == 0
    assert "linear: yes (all attributes)" in out
    assert "respects dominance: yes" in out
    assert "{25} < {30} < {34} < {37} < {39}" in out


def test_analyze_xor(capsys):
    code, out, _ = run(capsys, "analyze", MODELS / "xor.csv")
    assert code == 0
    assert "linear: no" in out
    assert "witness levels" in out


def test_analyze_worked_model_json(capsys):
    code, out, _ = run(capsys, "--json", "analyze", MODELS / "two_profile_electre3.json")
    assert code == 0
    report = json.loads(out)
    assert len(report["attributes"][0]["classes"]) == 7
    assert report["linear"] and report["respects_dominance"]


def test_minimal_worked_model(capsys, tmp_path):
    out_csv = tmp_path / "min.csv"
    code, _, _ = run(capsys, "minimal", MODELS / "two_profile_electre3.json", "-o", out_csv)
    assert code == 0
    model = load_model(MODELS / "two_profile_electre3.json")
    assert set(read_alternatives(out_csv, model.space)) == set(TWO_PROFILE_MINIMAL)


def test_verify_sum_rule_formulations(capsys):
    code, out, _ = run(capsys, "verify", MODELS / "sum_rule.csv", MODELS / "sum_rule_single_profile.json")
    assert code == 0
    assert out.strip() == "identical (125/125)"


def test_verify_reports_difference(capsys):
    code, out, _ = run(capsys, "verify", MODELS / "sum_rule.csv", MODELS / "sum_six.csv")
    assert code == 2
    code, out, _ = run(
        capsys, "verify", MODELS / "two_profile_electre3.json", MODELS / "two_profile_model_e.json"
    )
    assert code == 1
    assert out.startswith("different at")


def test_transform_electre1_to_unanimous(capsys, tmp_path):
    dest = tmp_path / "u.json"
    code, out, _ = run(capsys, "transform", MODELS / "two_profile_electre1.json", "--to", "unanimous", "-o", dest)
    assert code == 0
    rep = load_model(dest)
    assert set(rep.profiles) == set(TWO_PROFILE_STEP_MINIMAL)
    assert rep.family.is_unanimous
    doc = json.loads(dest.read_text())
    assert doc["metadata"]["verification"]["identical"]
    assert verify_equivalence(rep, load_model(MODELS / "two_profile_electre1.json"), rep.space)


def test_transform_partition_targets(capsys, tmp_path):
    for target, count in (("unanimous", 12), ("etrinb-pc", 12)):
        dest = tmp_path / f"{target}.json"
        code, out, _ = run(capsys, "transform", MODELS / "sum_rule.csv", "--to", target, "-o", dest)
        assert code == 0
        assert f"({count} profiles)" in out
        assert verify_equivalence(load_model(dest), read_partition(MODELS / "sum_rule.csv"), load_model(dest).space)
    dest = tmp_path / "d.json"
    assert run(capsys, "transform", MODELS / "sum_rule.csv", "--to", "decomposable", "-o", dest)[0] == 0


def test_transform_veto_model_needs_minimal_route(capsys, tmp_path):
    dest = tmp_path / "u.json"
    code, _, err = run(capsys, "transform", MODELS / "two_profile_model_e.json", "--to", "unanimous", "-o", dest)
    assert code == 2
    assert "--via minimal" in err
    code, _, _ = run(
        capsys, "transform", MODELS / "two_profile_model_e.json", "--to", "unanimous", "--via", "minimal", "-o", dest
    )
    assert code == 0


def test_transform_flatten_veto_free(capsys, tmp_path):
    dest = tmp_path / "flat.json"
    code, out, _ = run(
        capsys, "transform", MODELS / "two_profile_model_e_no_veto.json", "--to", "unanimous", "--via", "flatten",
        "-o", dest,
    )
    assert code == 0
    assert "(5 profiles)" in out


def test_transform_refuses_non_linear(capsys, tmp_path):
    code, _, err = run(capsys, "transform", MODELS / "xor.csv", "--to", "unanimous", "-o", tmp_path / "x.json")
    assert code == 2
    assert "not linear" in err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "antichain", "--chains", "2,2,2")
    assert code == 0 and ": 3" in out
    code, out, _ = run(capsys, "--json", "count", "antichain", "--chains", "21,21,21")
    payload = json.loads(out)
    assert payload["closed_form"] == payload["oracle"] == 331
    code, out, _ = run(capsys, "--json", "count", "dedekind", "-n", "4")
    assert json.loads(out) == {"n": 4, "monotone_functions": 168, "partitions": 166}
    assert run(capsys, "count", "dedekind", "-n", "7")[0] == 3
    assert run(capsys, "count", "antichain", "--chains", "a,b")[0] == 2


def test_enumeration_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("ETRI_ENUM_CAP", "100")
    code, _, err = run(capsys, "sort", MODELS / "two_profile_electre3.json", "--full-space")
    assert code == 3
    assert "cap" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "analyze", tmp_path / "nope.csv")[0] == 2


def test_analyze_dominance_witness_text(capsys):
    _, out, _ = run(capsys, "analyze", MODELS / "xor.csv")
    assert "respects dominance: no ((1, 0) is in A, (1, 1) dominates it and is in U)" in out or \
        "respects dominance: no ((0, 1) is in A, (1, 1) dominates it and is in U)" in out
