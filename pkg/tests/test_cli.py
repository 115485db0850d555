import json
import os
import subprocess
import sys

import pytest

from drgkit.cli import main

PKG = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_gb_builtin_prints_nine_elements(capsys):
    code, out, err = run_cli(["gb", "builtin:S", "--depth", "5"], capsys)
    assert code == 0
    assert out.count("x4*x3") >= 3   # the three cubic completion elements


def test_missing_input_exit_2(capsys):
    code, out, err = run_cli(["hilbert", "nosuchfile"], capsys)
    assert code == 2


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("vars x\nrel x*x - x\n")
    code, out, err = run_cli(["parse", str(bad)], capsys)
    assert code == 2 and "homogeneous" in err


def test_json_reports_are_byte_identical(capsys):
    code1, out1, _ = run_cli(["hilbert", "builtin:S", "--depth", "6",
                              "--format", "json"], capsys)
    code2, out2, _ = run_cli(["hilbert", "builtin:S", "--depth", "6",
                              "--format", "json"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["hilbert_function"] == [1, 4, 10, 20, 35, 56, 84]
    assert "elapsed_ms" not in rep


def test_center_and_dual(capsys):
    code, out, _ = run_cli(["center", "builtin:S", "--degree", "2"], capsys)
    assert code == 0 and "dimension: 1" in out
    code, out, _ = run_cli(["dual", "builtin:S"], capsys)
    assert code == 0 and "a1" in out


def test_regseq_uses_catalog_sequence(capsys):
    code, out, _ = run_cli(["regseq", "builtin:R_YZ", "--format", "json"],
                           capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["regular"] is True
    assert rep["quotient_total_dimension"] == 64


def test_fixtures_directory(tmp_path, capsys):
    (tmp_path / "myalg.alg").write_text(
        "vars x y\norder deglex y < x\nrel x*y - y*x\n")
    code, out, _ = run_cli(["hilbert", "myalg", "--fixtures", str(tmp_path),
                            "--depth", "4", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["hilbert_function"] == [1, 2, 3, 4, 5]


def test_poincare_command(capsys):
    code, out, _ = run_cli(["poincare", "--group", "SD16",
                            "--gens", "b,bc,ab,abcd", "--format", "json"],
                           capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["poincare_polynomial"] == [1, 4, 6, 4, 1]
    assert rep["value_at_one"] == 16


def test_grading_command(capsys):
    code, out, _ = run_cli(["grading", "builtin:T", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["homogeneous"] is True


def test_identity_component_command(capsys):
    code, out, _ = run_cli(["identity-component", "builtin:S", "--depth", "6",
                            "--format", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert sorted(rep["generators"]) == ["x1^2", "x2^2", "x3*x4", "x4*x3"]


def test_verify_subset_with_csv_and_figures(tmp_path, capsys):
    csv = tmp_path / "claims.csv"
    figs = tmp_path / "figs"
    code, out, _ = run_cli(["verify-paper", "--claims", "S.center,S.z_is",
                            "--csv", str(csv), "--figures", str(figs),
                            "--format", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "pass" and rep["total"] == 2
    assert csv.exists() and "pass" in csv.read_text()
    assert (figs / "claims.png").exists()


def test_koszulcheck_with_matrix_file(tmp_path, capsys, S):
    from drgkit.dual import matrix_to_json
    mats = S.aux["koszul_matrices"]
    path = tmp_path / "mats.json"
    path.write_text(json.dumps([
        matrix_to_json(m, S.presentation.gens, S.presentation.order)
        for m in mats]))
    code, out, _ = run_cli(["koszulcheck", "builtin:S", "--depth", "4",
                            "--matrices", str(path), "--format", "json"],
                           capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["is_complex"] is True and rep["verdict"] == "pass"


def test_low_depth_reports_bounds_not_failures(capsys):
    code, out, _ = run_cli(["verify-paper", "--claims", "free_module",
                            "--depth", "2", "--format", "json"], capsys)
    assert code == 3
    rep = json.loads(out)
    assert rep["verdict"] == "bound-exceeded"
    assert rep["results"][0]["verdict"] == "bound-exceeded"


def test_unsupported_normal2_input_exit_2(capsys):
    # the skew presentation of R has a one-dimensional point scheme
    code, out, err = run_cli(["normal2", "builtin:R_YZ"], capsys)
    assert code == 2 and "point scheme" in err


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "drgkit.cli", "parse",
                           "builtin:craw_m2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "u^2" in proc.stdout
