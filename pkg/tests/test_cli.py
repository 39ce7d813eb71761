import json
import subprocess
import sys

import pytest

from affinepm.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_build_gamma_G2_omega2(capsys):
    code, out, _ = run(["build", "--type", "G2", "--graph", "gamma", "--weights", "2"], capsys)
    assert code == 0
    g = json.loads(out)
    assert [v["word"] for v in g["vertices"]] == ["e", "2", "12", "212", "1212", "21212"]
    assert len(g["edges"]) == 8


def test_build_b0_A2(capsys):
    code, out, _ = run(["build", "--type", "A", "--rank", "2", "--graph", "b0"], capsys)
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 2


def test_dot_for_rho_A2(capsys):
    code, out, _ = run(["build", "--type", "A", "--rank", "2", "--graph", "rho", "--format", "dot"], capsys)
    assert code == 0
    nodes = [line for line in out.splitlines() if "[label=" in line and "->" not in line]
    assert len(nodes) == 6
    assert out.count("->") == 9


def test_json_schema_and_exact_coefficients(capsys):
    _, out, _ = run(["build", "--type", "G2", "--graph", "b0"], capsys)
    g = json.loads(out)
    assert set(g) >= {"legend", "vertices", "edges"}
    assert g["legend"] == {"z1": "omega_1", "z2": "omega_2"}
    w = next(e["weight"] for e in g["edges"] if e["weight"][0]["exps"] == [1, 0])
    assert w == [{"exps": [1, 0], "coef": "3"}]


def test_output_is_deterministic(capsys):
    argv = ["build", "--type", "C", "--rank", "3", "--graph", "gamma", "--weights", "2"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_round_trip_is_byte_identical(tmp_path, capsys):
    first = tmp_path / "g.json"
    second = tmp_path / "h.json"
    assert main(["build", "--type", "G2", "--graph", "rho", "--out", str(first)]) == 0
    assert main(["convert", str(first), "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_accept(capsys):
    assert run(["accept", "--type", "G2", "--mode", "grassmannian", "0", "2", "1", "2", "1", "2"], capsys)[1] == "true\n"
    assert run(["accept", "--type", "G2", "--mode", "grassmannian", "0", "0"], capsys)[1] == "false\n"
    written = ["accept", "--type", "G2", "--reading", "written", "2", "1", "2", "1", "2", "0"]
    assert run(written, capsys)[1] == "true\n"


def test_structure_constants_A2(capsys):
    code, out, _ = run(["structure-constants", "--type", "A", "--rank", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "left,right,result,coefficient"
    assert "0,0,e,z1 + z2" in lines
    assert "#,z1,omega_1" in lines


def test_verify_suites(capsys):
    code, out, _ = run(["verify", "--type", "G2", "--suite", "main-theorem", "--weights", "rho"], capsys)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(["verify", "--type", "A", "--rank", "2", "--suite", "pieri", "--max-length", "8"], capsys)
    assert code == 0 and json.loads(out)["ok"]


def test_dihedral_suite_reports_negative_and_exits_zero(capsys):
    code, out, _ = run(["verify", "--suite", "dihedral-counterexample"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert all(c["verdict"] == "multiplicative_not_positive" for c in rep["details"]["cases"])


def test_failed_verification_exits_one(capsys):
    # Gamma_{W^J} for A3, J' = {2} has a singular path matrix at e
    code, out, _ = run(["verify", "--type", "A", "--rank", "3", "--suite", "certificate", "--graph", "wj", "--weights", "2"], capsys)
    assert code == 1
    assert json.loads(out)["details"]["verdict"] == "not_multiplicative"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["build"],
        ["build", "--type", "E", "--rank", "8"],
        ["build", "--type", "A", "--rank", "2", "--graph", "nonsense"],
        ["build", "--type", "A", "--rank", "2", "--graph", "gamma", "--weights", "5"],
        ["build", "--type", "A", "--rank", "2", "--graph", "fundamental", "--lattice", "1,0;0,2", "--domain", "e,0,10,20"],
        ["accept", "--type", "A", "--rank", "2", "7"],
        ["convert", "/nonexistent/file.json"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "affinepm: error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "affinepm", "accept", "--type", "A", "--rank", "2", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "true\n"
