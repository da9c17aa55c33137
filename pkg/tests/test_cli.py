from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from cosegal.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--report", "json")
    return code, json.loads(out)


def test_dec_counts_decompositions(capsys):
    code, out = run_json(capsys, "dec", "A.B.C.D.E")
    assert code == 0 and out["ok"] and out["count"] == 8
    assert ["A.B", "B.C.D.E"] in out["decompositions"]


def test_validate_strict_and_planted_defect(capsys):
    code, out = run_json(capsys, "validate", CORPUS / "z2_strict.json")
    assert code == 0 and out["cosegal"] and out["violations"] == []
    code, out = run_json(capsys, "validate", CORPUS / "z2_planted_defect.json")
    assert code == 1 and not out["ok"]
    assert "associativity" in {v["kind"] for v in out["violations"]}


def test_malformed_input_exits_2(capsys):
    code, out = run_json(capsys, "validate", CORPUS / "malformed.json")
    assert code == 2 and not out["ok"] and out["error"]


def test_missing_file_and_bad_usage_exit_2(capsys, tmp_path):
    code, _ = run(capsys, "validate", tmp_path / "nope.json")
    assert code == 2
    assert main(["dec"]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_json_output_is_deterministic(capsys):
    outs = [run(capsys, "strictify", CORPUS / "free_abc.json", "--report", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["ok"]


def test_free_and_adjoint_check(capsys):
    code, out = run_json(capsys, "free", CORPUS / "family_abc.json")
    assert code == 0
    free = json.loads((CORPUS / "free_abc.json").read_text())
    assert out["diagram"]["values"] == free["values"]
    code, out = run_json(capsys, "adjoint-check", CORPUS / "family_abc.json", CORPUS / "free_abc.json")
    assert code == 0 and out["round_trip"] and out["hom_free"] == out["hom_generators"]


def test_strictify_reads_off_compositions(capsys):
    code, out = run_json(capsys, "strictify", CORPUS / "free_abc.json")
    assert code == 0 and out["hom"]["A.C"] == 2


def test_cosegalify_converges_or_reports_divergence(capsys):
    code, out = run_json(capsys, "cosegalify", CORPUS / "lax_not_cosegal.json")
    assert code == 0 and out["output_cosegal"] and not out["input_cosegal"]
    code, out = run_json(capsys, "cosegalify", CORPUS / "loop_diverges.json")
    assert code == 1 and "diverges" in out["error"]


def test_pushout_and_skeleton(capsys):
    code, out = run_json(capsys, "pushout", CORPUS / "pushout_alpha.json", CORPUS / "pushout_sigma.json")
    assert code == 0 and out["bijection_preserved"]
    code, out = run_json(capsys, "skeleton", CORPUS / "z2_strict.json", "--to", "2")
    assert code == 0 and out["ok"]


@pytest.mark.parametrize("sub,name,code", [
    ("validate", "operad_z2.json", 0),
    ("validate", "operad_z2_broken.json", 1),
    ("ox", "ox_abc.json", 0),
    ("twocat", "twocat_z2.json", 0),
    ("twocat", "twocat_max.json", 0),
])
def test_operad_tools(capsys, sub, name, code):
    got, out = run_json(capsys, "operad", sub, CORPUS / name)
    assert got == code
    if name == "ox_abc.json":
        assert out["colors"] == 9 and out["operations"] == 120
    if sub == "twocat":
        assert out["round_trip"]


def test_text_report(capsys):
    code, out = run(capsys, "dec", "A.B.C")
    assert code == 0 and out.startswith("dec: ok") and "count: 2" in out


def test_suite_subset_and_jobs_override(capsys, monkeypatch):
    code, out = run(capsys, "suite", "--only", "1,2")
    assert code == 0 and out.count("[PASS]") == 2
    serial = run(capsys, "suite", "--only", "2", "--report", "json")[1]
    monkeypatch.setenv("COSEGAL_JOBS", "2")
    code, out = run_json(capsys, "suite", "--only", "1,2")
    assert code == 0 and [r["passed"] for r in out["criteria"]] == [True, True]
    assert run(capsys, "suite", "--only", "2", "--report", "json")[1] == serial
    assert main(["suite", "--only", "99"]) == 2
    capsys.readouterr()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cosegal", "dec", "A.B.C", "--report", "json"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["count"] == 2
