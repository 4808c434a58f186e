import json

import pytest

from e5torsion.main import main
from e5torsion.suites import VerifyOptions, checks_for, run_check, suite_names
from e5torsion.utils.report import CheckResult, exit_code, summary_table


def test_unknown_suite(capsys):
    assert main(["verify", "nosuch"]) == 2
    assert "nosuch" in capsys.readouterr().err


def test_bad_options():
    assert main(["verify", "field", "--terms", "0"]) == 2
    assert main(["eval", "0", "-1"]) == 2
    assert main(["frobnicate"]) == 2


def test_verify_field(capsys):
    assert main(["verify", "field", "--jobs", "1", "--json"]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines() if line]
    assert len(lines) == len(checks_for("field"))
    assert {line["suite"] for line in lines} == {"field"}
    assert all(line["status"] == "pass" for line in lines)
    assert set(lines[0]) == {"suite", "id", "anchor", "status", "detail", "ms"}


def test_eval_at_i(capsys):
    assert main(["eval", "0", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["tau"] == [0.0, 1.0]
    assert out["r"][0] == pytest.approx(0.2840790438, abs=1e-7)
    assert out["passed"]


def test_points_exact(capsys):
    assert main(["points", "u=1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["b"] == "(-11/2, 0, 0, 0)"
    assert out["exact"]
    assert len(out["points"]) == 20


def test_points_numeric(capsys):
    assert main(["points", "b=1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert not out["exact"]
    assert len(out["points"]) == 20


@pytest.mark.parametrize("value, error", [("u=-1", "PoleError"), ("0", "SingularCurveError")])
def test_points_errors(capsys, value, error):
    assert main(["points", value]) == 1
    assert error in json.loads(capsys.readouterr().out)["error"]


def test_points_unparsable():
    assert main(["points", "abc"]) == 2


def test_suite_registry():
    assert suite_names()[-1] == "all"
    assert {"field", "curve", "watson", "torsion", "qseries"} <= set(suite_names())
    with pytest.raises(KeyError):
        checks_for("nosuch")


def test_skipped_without_taus():
    opts = VerifyOptions(taus=(), timing=False)
    result = run_check(("qseries", "fricke", opts))
    assert result.status == "skipped"
    assert result.ms == 0


def test_report():
    results = [
        CheckResult("field", "a", "x", "pass"),
        CheckResult("field", "b", "x", "fail", "불일치"),
        CheckResult("curve", "c", "y", "skipped"),
    ]
    assert exit_code(results) == 1
    assert exit_code(results[:1]) == 0
    table = summary_table(results)
    assert "field" in table and "불일치" in table
    with pytest.raises(ValueError):
        CheckResult("field", "a", "x", "maybe")


def test_points_large_b(capsys):
    assert main(["points", "b=100000"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["points"]) == 20


def test_timing_off_by_default(capsys):
    assert run_check(("field", "galois", VerifyOptions())).ms == 0
    reports = []
    for _ in range(2):
        assert main(["verify", "field", "--jobs", "1", "--json"]) == 0
        reports.append(capsys.readouterr().out)
    assert reports[0] == reports[1]
    assert all(json.loads(line)["ms"] == 0 for line in reports[0].splitlines() if line)
