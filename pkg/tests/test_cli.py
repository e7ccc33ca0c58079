import json

import pytest

from etaq.cli import fmt, run_cli


def test_verify_pass_exit_code(capsys):
    assert run_cli(["verify", "--theorem", "M1", "--bound", "1000"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_violation_exit_code(capsys):
    assert run_cli(["verify", "--theorem", "CLASSNUM", "-b", "50", "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "fail" and report["violations"][0]["n"] == 10


def test_expand_json(capsys):
    assert run_cli(["expand", "--eta", "1^4 2^2 4^-2", "--terms", "10", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["coefficients"] == [1, -4, 0, 16, -8, -24, 0, 32, 24, -52]


def test_sturm(capsys):
    assert run_cli(["sturm", "--weight", "2", "--level", "144"]) == 0
    assert capsys.readouterr().out.strip() == "48"
    assert run_cli(["sturm", "--weight", "3/2", "--level", "576"]) == 0
    assert capsys.readouterr().out.strip() == "144"


def test_hurwitz_rational_output(capsys):
    assert run_cli(["hurwitz", "0", "3", "23", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"0": "-1/12", "3": "1/3", "23": "3"}


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["verify"], ["verify", "--theorem", "ZZ"], ["sturm", "--weight", "x", "--level", "4"],
    ["sturm", "--weight", "1/3", "--level", "4"], ["expand", "--eta", "0^2"], ["scan-qp", "--p", "9", "--which", "Q"],
    ["scan-qp", "--p", "3", "--which", "P"], ["verify", "--theorem", "M1", "-b", "0"],
])
def test_usage_errors(argv, capsys):
    assert run_cli(argv) == 2


def test_scan_threshold_exit_zero(capsys):
    assert run_cli(["scan-qp", "--p", "7", "--which", "P", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "pass-with-threshold" and out["threshold"] == 71


def test_identity_and_lemma(capsys):
    assert run_cli(["identity", "--list"]) == 0
    assert "classnum" in capsys.readouterr().out
    assert run_cli(["identity", "level16-eisenstein", "-b", "200"]) == 0
    assert run_cli(["verify", "--lemma", "r-counts", "-b", "200"]) == 0


def test_fmt():
    assert fmt(3) == "3" and fmt(-0.5) == "-1/2"
