import json
import subprocess
import sys
from pathlib import Path

import pytest

MAIN = Path(__file__).parent.parent / "main.py"


def run_cli(*args, cwd=None):
    return subprocess.run([sys.executable, str(MAIN), *args], capture_output=True, text=True, cwd=cwd)


def test_basis_json():
    result = run_cli("basis", "--family", "U", "--max-degree", "1", "--t", "0")
    assert result.returncode == 0, result.stderr
    data = json.loads(result.stdout)
    assert data[0]["family"] == "U"
    assert [(e["n"], e["m"], e["parity"]) for e in data[0]["elements"]] == [
        (0, 0, "+"), (1, 0, "+"), (1, 1, "+"), (1, 1, "-")]
    assert data[0]["elements"][2]["poly"] == [{"e": [0, 1, 0], "c": "-1"}]


def test_basis_output_is_deterministic(tmp_path: Path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    for out in (first, second):
        result = run_cli("basis", "--family", "Z", "--max-degree", "2", "--t", "1/4,-1",
                         "--format", "csv", "--out", str(out))
        assert result.returncode == 0, result.stderr
    assert first.read_bytes() == second.read_bytes()
    lines = first.read_text().splitlines()
    assert lines[0] == "t,family,n,m,parity,component,e0,e1,e2,coeff"


def test_empty_family_is_usage_error():
    result = run_cli("basis", "--family", "", "--t", "0")
    assert result.returncode == 2


def test_coeffs_csv():
    result = run_cli("coeffs", "--family", "U_to_U", "--max-degree", "2", "--format", "csv")
    assert result.returncode == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "n,m,k,value"
    assert "2,0,1,-1/3" in lines
    assert "2,2,1,0" in lines


def test_malformed_t_is_usage_error():
    result = run_cli("coeffs", "--family", "V_to_V", "--t", "1/x")
    assert result.returncode == 2
    result = run_cli("gram", "--family", "V", "--t", "1")
    assert result.returncode == 2


def test_gram_json():
    result = run_cli("gram", "--family", "V", "--max-degree", "2", "--t", "1/4")
    assert result.returncode == 0, result.stderr
    [block] = json.loads(result.stdout)
    assert block["unit"] == "pi"
    assert block["diagonal"] is True
    assert block["rank"] == len(block["labels"])
    assert block["entries"][0][0] == "1"


def test_convert():
    result = run_cli("convert", "--family", "U", "--n", "2", "--m", "0",
                     "--t-source", "0", "--t-target", "1/4")
    assert result.returncode == 0, result.stderr
    data = json.loads(result.stdout)
    assert data["terms"] == [
        {"n": 2, "m": 0, "parity": "+", "coefficient": "1"},
        {"n": 0, "m": 0, "parity": "+", "coefficient": "-1/12"},
    ]


def test_verify_exit_codes():
    result = run_cli("verify", "--suite", "bbs,roundtrip", "--max-degree", "2", "--t", "1/4,-3")
    assert result.returncode == 0, result.stderr
    data = json.loads(result.stdout)
    assert data["passed"] is True
    assert [s["suite"] for s in data["suites"]] == ["bbs", "roundtrip"]

    result = run_cli("verify", "--suite", "nosuch")
    assert result.returncode == 2


def test_plotdata_empty_grid():
    result = run_cli("plotdata", "--family", "U", "--n", "2", "--grid", "0", "--t", "1/4")
    assert result.returncode == 0, result.stderr
    assert result.stdout == "x0,x1,x2,value\n"


def test_plotdata_spheroidal_with_png(tmp_path: Path):
    png = tmp_path / "u.png"
    out = tmp_path / "u.csv"
    result = run_cli("plotdata", "--family", "U", "--n", "2", "--m", "1", "--t", "1/4",
                     "--coords", "spheroidal", "--grid", "5", "--out", str(out), "--png", str(png))
    assert result.returncode == 0, result.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "u,v,phi,x0,x1,x2,value"
    assert len(lines) == 26
    assert png.exists()


def test_plotdata_spheroidal_rejects_oblate():
    result = run_cli("plotdata", "--family", "U", "--n", "1", "--t", "-1", "--coords", "spheroidal")
    assert result.returncode == 2


@pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
def test_bad_config_file(tmp_path: Path, content):
    config = tmp_path / "config.json"
    config.write_text(content)
    result = run_cli("coeffs", "--family", "U_to_U", "--config", str(config))
    assert result.returncode == 2


def test_config_file_supplies_defaults(tmp_path: Path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"max_degree": 1, "format": "csv", "t_values": ["1/4"]}))
    result = run_cli("coeffs", "--family", "U_to_U", "--config", str(config))
    assert result.returncode == 0, result.stderr
    assert result.stdout.splitlines()[0] == "n,m,k,value"
    result = run_cli("coeffs", "--family", "U_to_U", "--config", str(config), "--format", "json")
    assert json.loads(result.stdout)["family"] == "U_to_U"


@pytest.mark.parametrize("args", [
    ("convert", "--family", "V", "--n", "2", "--m", "0", "--t-source", "0", "--t-target", "3"),
    ("convert", "--family", "U", "--n", "2", "--m", "0", "--t-source", "1", "--t-target", "0"),
    ("coeffs", "--family", "W_mut_mu", "--t-target", "5", "--t-source", "2"),
    ("coeffs", "--family", "W_mut_mu", "--t-target", "1/4", "--t-source", "1/y"),
])
def test_source_and_target_parameters_are_validated(args):
    result = run_cli(*args)
    assert result.returncode == 2
    assert result.stdout == ""


def test_verify_intersection_at_single_degree():
    result = run_cli("verify", "--suite", "intersection", "--n", "4", "--t", "1/2")
    assert result.returncode == 0, result.stderr
    [suite] = json.loads(result.stdout)["suites"]
    assert suite["passed"] is True
    assert [report["n"] for report in suite["details"]["reports"]] == [4]

    result = run_cli("verify", "--suite", "intersection", "--n", "0", "--t", "1/2")
    assert result.returncode == 2


def test_plotdata_values_match_exact_evaluation():
    from sympy import Rational

    from core.harmonics import HarmonicIndex, spheroidal_solid_harmonic

    result = run_cli("plotdata", "--family", "U", "--n", "3", "--m", "1", "--parity", "-",
                     "--t", "1/4", "--grid", "7")
    assert result.returncode == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "x0,x1,x2,value"
    poly = spheroidal_solid_harmonic(HarmonicIndex(3, 1, "-"), "1/4")
    assert len(lines) > 1
    for line in lines[1:]:
        x0, x1, x2, value = (float(v) for v in line.split(","))
        assert x0 ** 2 + x1 ** 2 / 0.75 <= 1.0 + 1e-12
        exact = float(poly.evaluate((Rational(x0), Rational(x1), Rational(x2))))
        assert value == pytest.approx(exact, rel=1e-12, abs=1e-14)
