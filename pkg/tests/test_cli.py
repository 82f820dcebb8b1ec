"""Command-line front end: outputs, exit codes, determinism."""
import json
import subprocess
import sys

import pytest

from qfock.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gamma(capsys):
    assert run(capsys, "gamma", "--n", "2", "--a", "1") == (0, "1 + q^2\n", "")
    code, out, _ = run(capsys, "gamma", "--n", "3", "--a", "2", "--format", "json")
    assert code == 0 and json.loads(out)["gamma"] == "2 + 2*q^4 + 2*q^8"


def test_singular_dimensions(capsys):
    code, out, _ = run(capsys, "singular", "--n", "2", "--charge", "0", "--depth", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["dimensions"] == [1, 1, 2]


def test_act_and_normal_order(capsys):
    assert run(capsys, "act", "--n", "2", "--op", "E(0)*F(1)", "--vec", "vac(0)")[:2] == (0, "0\n")
    code, out, _ = run(capsys, "act", "--n", "2", "--op", "F(0)", "--vec", "vac(0)")
    assert out == "u(1)^vac(-1)\n"
    code, out, _ = run(capsys, "normal-order", "--n", "2", "--vec", "u(0)^u(3)^vac(-2)")
    assert out == "(-1*q)*u(3)^u(0)^vac(-2) + (-1 + q^2)*u(2)^u(1)^vac(-2)\n"


def test_bop(capsys):
    code, out, _ = run(capsys, "bop", "--n", "2", "--a", "-1", "--vec", "vac(0)")
    assert code == 0 and out == "u(2)^vac(-1) + (-1*q)*u(1)^u(0)^vac(-2)\n"
    code, out, _ = run(capsys, "bop", "--n", "2", "--a", "-1", "--vec", "vac(0)", "--format", "json")
    data = json.loads(out)
    assert data["terms"][0] == {"charge": 0, "head": [2], "coeff": [[0, "1/1"]]}


def test_two_point_json(capsys):
    code, out, _ = run(capsys, "two-point", "--n", "2", "--charge", "0", "--order", "3", "--kmax", "8",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["factorization"] is True
    assert data["omega"][1] == [1, "(-1 + q^2) / 1"]
    assert data["xi_sign"] == -1
    assert data["certified_degree"] == 39


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--n", "2", "--depth", "2", "--format", "json")
    levels = json.loads(out)["levels"]
    assert [len(lv["wedges"]) for lv in levels] == [1, 1, 2]


def test_hecke_oracle(capsys):
    code, out, _ = run(capsys, "hecke-oracle", "--n", "2", "--length", "2")
    assert code == 0 and out.rstrip().endswith("checks")


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "straightening", "--n", "3", "--seed", "1")
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["gamma", "--n", "1", "--a", "1"],
    ["gamma", "--n", "2", "--a", "0"],
    ["act", "--n", "2", "--op", "E(5)", "--vec", "vac(0)"],
    ["act", "--n", "2", "--op", "E(0)", "--vec", "vac(0"],
    ["verify", "nonsense", "--n", "2"],
    ["bop", "--n", "2", "--a", "0", "--vec", "vac(0)"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_parse_error_shows_position(capsys):
    code, _, err = run(capsys, "normal-order", "--n", "2", "--vec", "u(1)^vac(0) + ")
    assert code == 2 and "position" in err and "^" in err


@pytest.mark.parametrize("argv", [
    ["verify", "all", "--n", "2", "--seed", "7"],
    ["singular", "--n", "3", "--depth", "2", "--format", "json"],
    ["two-point", "--n", "3", "--order", "2"],
])
def test_byte_determinism(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "qfock", "gamma", "--n", "2", "--a", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "1 + q^2\n"
