import csv
import json

import numpy as np
import pytest

from circleorth.cli import main

BS4 = {"weight": {"kind": "bernstein_szego", "alphas": [0.4, 0.3, 0.2, 0.1]}}


def run(tmp_path, command, cfg, *flags, out="out"):
    d = tmp_path / out
    d.mkdir(exist_ok=True)
    p = tmp_path / "config.json"
    p.write_text(json.dumps(cfg))
    return main([command, "--config", str(p), "--out", str(d), *flags]), d


def read_csv(path):
    lines = path.read_text().splitlines()
    assert lines[0] == "# schema_version: 1"
    return list(csv.DictReader(lines[1:]))


def test_compute_lebesgue(tmp_path):
    code, d = run(tmp_path, "compute", {"measure": {"weight": {"kind": "uniform"}}, "N": 4})
    assert code == 0
    rows = read_csv(d / "coefficients.csv")
    assert len(rows) == 5
    for r in rows[1:]:
        assert np.isclose(float(r["a"]), 2 ** -0.5) and np.isclose(float(r["b"]), 2 ** -0.5)
        assert all(float(r[k]) == 0 for k in ("beta", "iota", "jmath", "varsigma", "zeta"))
    for r in read_csv(d / "opuc.csv"):
        assert float(r["alpha_re"]) == 0 and float(r["alpha_im"]) == 0
        assert np.isclose(float(r["kappa"]), 1)


def test_compute_bernstein_szego(tmp_path):
    code, d = run(tmp_path, "compute", {"measure": {"weight": {"kind": "bernstein_szego", "alphas": [0.5]}},
                                        "N": 3})
    assert code == 0
    alpha = [float(r["alpha_re"]) for r in read_csv(d / "opuc.csv")]
    assert np.allclose(alpha, [0.5, 0, 0, 0, 0, 0], atol=1e-13)


def test_missing_output_directory(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"measure": {"weight": {"kind": "uniform"}}}))
    assert main(["compute", "--config", str(p), "--out", str(tmp_path / "nope")]) == 2
    assert "does not exist" in capsys.readouterr().err


@pytest.mark.parametrize("cfg", [{"measure": {"weight": {"kind": "bogus"}}},
                                 {"measure": {"weight": {"kind": "uniform"}}, "N": 0},
                                 {"measure": {"weight": {"kind": "uniform"}}, "tolerance": -1}])
def test_invalid_config(tmp_path, cfg):
    assert run(tmp_path, "verify", cfg)[0] == 2


def test_unreadable_config(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{not json")
    assert main(["verify", "--config", str(p), "--out", str(tmp_path)]) == 2


def test_verify_lebesgue(tmp_path):
    code, d = run(tmp_path, "verify", {"measure": {"weight": {"kind": "uniform"}}, "N": 4})
    assert code == 0
    doc = json.loads((d / "report.json").read_text())
    ids = doc["measures"][0]["identities"]
    assert doc["pass"] and doc["schema_version"] == 1
    assert all({"id", "eq", "n_range", "max_residual", "skipped", "pass"} <= set(e) for e in ids)
    assert sum(len(e["skipped"]) for e in ids) > 10


def test_verify_bernstein_szego(tmp_path, capsys):
    code, d = run(tmp_path, "verify", {"measure": BS4, "N": 5}, "--tol", "1e-8")
    assert code == 0
    doc = json.loads((d / "report.json").read_text())
    ids = doc["measures"][0]["identities"]
    assert all(e["pass"] for e in ids if e["gating"])
    # printed forms stay in the report with their residuals
    data = {e["id"] for e in ids if not e["gating"] and not e["pass"]}
    assert {"CAUCHY-ID-PHISTAR", "INT-ZPHISTAR", "BLOCK"} <= data
    assert "printed forms reported as data" in capsys.readouterr().out


def test_verify_forced_failure(tmp_path, capsys):
    code, d = run(tmp_path, "verify", {"measure": BS4, "N": 3}, "--tol", "1e-16", "--ids", "MR-*,KAPPA-*")
    assert code == 1
    doc = json.loads((d / "report.json").read_text())
    assert not doc["pass"] and doc["tolerance"] == 1e-16
    assert all(e["id"].startswith(("MR-", "KAPPA-")) for e in doc["measures"][0]["identities"])
    assert "FAIL" in capsys.readouterr().out


def test_verify_deterministic(tmp_path):
    cfg = {"measure": {"weight": {"kind": "bernstein_szego", "alphas": [0.3]}}, "N": 3, "seed": 5}
    _, d1 = run(tmp_path, "verify", cfg, out="a")
    _, d2 = run(tmp_path, "verify", cfg, out="b")
    assert (d1 / "report.json").read_bytes() == (d2 / "report.json").read_bytes()


def _triple_csv(path, N):
    rows = ["n,a,b,beta"] + [f"{n},{2 ** -0.5!r},{2 ** -0.5!r},0.0" for n in range(1, N + 1)]
    path.write_text("\n".join(rows) + "\n")


def test_favard_seven_roundtrip(tmp_path):
    code, d = run(tmp_path, "compute", {"measure": {"weight": {"kind": "geometric", "ratio": 0.5}}, "N": 4})
    assert code == 0
    code, d2 = run(tmp_path, "favard", {"coefficients": str(d / "coefficients.csv")}, out="fav")
    assert code == 0
    alpha = [float(r["alpha_re"]) for r in read_csv(d2 / "alphas.csv")]
    assert np.allclose(alpha, 0.5 ** np.arange(1, 9), atol=1e-8)
    doc = json.loads((d2 / "roundtrip.json").read_text())
    assert doc["kind"] == "seven" and all(r["pass"] for r in doc["roundtrip"])


def test_favard_lebesgue_strict_rejected(tmp_path, capsys):
    _triple_csv(tmp_path / "leb.csv", 4)
    assert run(tmp_path, "favard", {"coefficients": "leb.csv"})[0] == 2
    err = capsys.readouterr().err
    assert "admissibility violations" in err and "n=" in err


def test_favard_lebesgue_closed(tmp_path):
    _triple_csv(tmp_path / "leb.csv", 4)
    code, d = run(tmp_path, "favard", {"coefficients": "leb.csv"}, "--mode", "closed")
    assert code == 0
    rows = read_csv(d / "alphas.csv")
    assert all(float(r["alpha_re"]) == 0 and float(r["alpha_im"]) == 0 for r in rows)


def test_favard_needs_coefficients(tmp_path):
    assert run(tmp_path, "favard", {})[0] == 2


def test_report_empty_measure_list(tmp_path):
    assert run(tmp_path, "report", {"measures": []})[0] == 2


def test_report_lebesgue(tmp_path):
    code, d = run(tmp_path, "report", {"measure": {"weight": {"kind": "uniform"}}, "N": 3})
    assert code == 0
    rows = read_csv(d / "diagnostics.csv")
    assert rows and all(abs(float(r["gap"])) < 1e-12 for r in rows)


def test_report_golden_header(tmp_path):
    code, d = run(tmp_path, "report", {"measures": [BS4, {"weight": {"kind": "uniform"}}], "N": 3})
    assert code == 0
    lines = (d / "diagnostics.csv").read_text().splitlines()
    assert lines[:2] == ["# schema_version: 1", "measure,n,quantity,value,reference,gap"]
    assert all(len(next(csv.reader([l]))) == 6 for l in lines[2:])
    md = (d / "diagnostics.md").read_text()
    assert md.startswith("# Asymptotic diagnostics") and md.count("## ") == 2
