import json
import subprocess
import sys

import pytest

from trispec.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_eval_family_spec(capsys):
    code, out = _run(capsys, "eval", "kplus:5,3", "--quantities", "lambda,triangles,triangular_edges,booksize")
    d = json.loads(out)
    assert code == 0
    assert d["quantities"]["triangles"] == 3
    assert d["quantities"]["triangular_edges"] == 7
    assert d["quantities"]["booksize"] == 3
    assert abs(d["quantities"]["lambda"]["value"] - 4.1142019093) < 1e-9


def test_eval_with_statements(capsys):
    code, out = _run(capsys, "eval", "DLo", "--statements", "spectral_far;efr", "--quantities", "n,m")
    d = json.loads(out)
    assert code == 1
    assert [v["outcome"] for v in d["verdicts"]] == ["Violated", "NotApplicable"]


def test_scan_moon_moser_exit_zero(capsys):
    code, out = _run(capsys, "scan", "moon_moser", "--n", "3..7", "--threads", "1")
    assert code == 0 and json.loads(out)["violations"] == []


def test_scan_params_and_formats(capsys, tmp_path):
    out_file = tmp_path / "wilf.csv"
    code, _ = _run(capsys, "scan", "wilf", "--n", "3..6", "--param", "r=3", "--format", "csv", "--out", str(out_file), "--threads", "1")
    assert code == 0 and out_file.read_text().startswith("statement_id")
    code, out = _run(capsys, "scan", "efr", "--n", "3..5", "--format", "text", "--threads", "1")
    assert code == 0 and "violations: 0" in out


def test_hunt_sqrt_m(capsys):
    code, out = _run(capsys, "hunt", "sqrt_m", "--n", "3..7", "--threads", "1")
    d = json.loads(out)
    assert code in (0, 1)
    assert (code == 1) == bool(d["violations"])


def test_hunt_witness_file_reproduces(capsys, tmp_path):
    code, out = _run(capsys, "hunt", "spectral_far", "--n", "3..6", "--threads", "1")
    witnesses = json.loads(out)["violations"]
    assert code == 1 and witnesses
    path = tmp_path / "w.g6"
    path.write_text("\n".join(witnesses) + "\n")
    code2, out2 = _run(capsys, "hunt", "spectral_far", "--file", str(path))
    assert code2 == 1 and json.loads(out2)["violations"] == witnesses


def test_verify_lemmas(capsys):
    code, out = _run(capsys, "verify-lemmas", "--n-max", "20")
    d = json.loads(out)
    assert code == 0 and d["all_certified"]
    assert {r["lemma"] for r in d["lemmas"]} == {"kplus_shifted", "kplusbar_even", "kplusbar_odd", "kplus_balanced_square"}
    assert d["polynomials"]["f1"]["6"] == "exact"


def test_minimizers_and_families(capsys):
    code, out = _run(capsys, "minimizers", "--n", "5", "--m", "7")
    assert code == 0 and json.loads(out)["extras"]["minimum"] == 5
    code, out = _run(capsys, "families", "kplus:3,3")
    assert json.loads(out)["m"] == 10
    code, out = _run(capsys, "families", "--format", "text")
    assert "turan" in out.split()


def test_usage_errors(capsys):
    assert main(["eval"]) == 64
    assert main(["scan", "efr", "--n", "3..12"]) == 64
    assert main(["scan", "wilf", "--param", "q=2"]) == 64
    with pytest.raises(SystemExit):
        main(["scan", "nosuch"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trispec", "eval", "D~{", "--quantities", "n,m,triangles"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["quantities"] == {"n": 5, "m": 10, "triangles": 10}
