# tests/cli/test_cli.py
# coding: utf-8
"""
Тесты командной строки: разбор флагов, файл задания, коды выхода,
детерминированный JSON и текстовый формат.
"""
import io
import json

import pytest

from src.cli import build_job, main
from src.model.errors import ParseError


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


# --- Тест 1: разбор аргументов ---
def test_flags_become_job():
    job = build_job([
        "zeta", "--preset", "node", "--n", "3", "--normalization", "codim",
        "--exclude-chars", "2,3", "--budget-points", "1000",
    ])
    assert job.command == "zeta"
    assert job.scheme.preset == "node"
    assert job.order == 3
    assert str(job.normalization) == "codim"
    assert job.strategy.excluded_primes == [2, 3]
    assert job.budgets.points == 1000


def test_explicit_scheme_and_fat_point():
    job = build_job([
        "arc", "--vars", "x,y", "--gens", "x*y", "--fat-vars", "t,u", "--fat-gens", "t^2,u^2,t*u",
    ])
    assert job.scheme.variables == ["x", "y"]
    assert job.scheme.generators == ["x*y"]
    assert job.fat.generators == ["t^2", "u^2", "t*u"]


def test_supplied_classes_switch_strategy():
    job = build_job(["zeta", "--preset", "cusp", "--n", "1", "--supplied", "1", "--supplied", "L^4"])
    assert job.strategy.kind == "supplied"
    assert job.strategy.supplied == ["1", "L^4"]


def test_certification_is_on_unless_disabled():
    assert build_job(["reduce", "--preset", "node", "--n", "2"]).certify is True
    assert build_job(["reduce", "--preset", "node", "--n", "2", "--no-certify"]).certify is False


def test_verify_takes_suite_positional():
    job = build_job(["verify", "structure"])
    assert job.suite == "structure"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["jet", "--preset", "cusp"],
        ["verify"],
        ["zeta", "--preset", "node", "--n", "zero"],
        ["count", "--preset", "node", "--exclude-chars", "2,x"],
    ],
)
def test_bad_arguments_raise_parse_error(argv):
    with pytest.raises(ParseError):
        build_job(argv)


def test_script_file(tmp_path):
    script = tmp_path / "job.json"
    script.write_text(json.dumps({"command": "jet", "scheme": {"preset": "cusp"}, "order": 4}), encoding="utf-8")
    job = build_job(["--script", str(script), "--format", "text"])
    assert job.command == "jet"
    assert job.format == "text"


def test_script_command_mismatch(tmp_path):
    script = tmp_path / "job.json"
    script.write_text(json.dumps({"command": "jet", "scheme": {"preset": "cusp"}, "order": 4}), encoding="utf-8")
    with pytest.raises(ParseError):
        build_job(["zeta", "--script", str(script)])


def test_script_with_unknown_key(tmp_path):
    script = tmp_path / "job.json"
    script.write_text(json.dumps({"command": "jet", "scheme": {"preset": "cusp"}, "order": 4, "extra": 1}))
    with pytest.raises(ParseError) as info:
        build_job(["--script", str(script)])
    assert info.value.details["errors"]


# --- Тест 2: выполнение ---
def test_jet_command_prints_json():
    code, out, err = run(["jet", "--preset", "cusp", "--n", "4"])
    assert code == 0
    assert err == ""
    assert json.loads(out)["length"] == 7


def test_output_is_deterministic():
    argv = ["auto", "--preset", "node", "--n", "2"]
    assert run(argv)[1] == run(argv)[1]


def test_count_command():
    code, out, _ = run(["count", "--vars", "x,y", "--gens", "x*y", "--prime", "7"])
    assert code == 0
    assert json.loads(out)["count"] == 13


def test_count_with_free_variables():
    code, out, _ = run(["count", "--vars", "a,b,c,d", "--gens", "a*c", "--prime", "3"])
    assert code == 0
    assert json.loads(out)["count"] == 45


def test_auto_from_explicit_equations():
    code, out, _ = run(["auto", "--vars", "x,y", "--gens", "x*y", "--point", "0,0", "--n", "2"])
    output = json.loads(out)
    assert code == 0
    assert output["fat"]["length"] == 3
    assert len(output["grid"]) == 2


def test_describe_lists_engines():
    code, out, _ = run(["describe"])
    described = json.loads(out)
    assert code == 0
    assert {"ArcEngine", "ReductionEngine", "MotiveEngine", "ZetaEngine", "VerifyEngine"} <= set(described)


def test_text_format():
    code, out, _ = run(["count", "--preset", "node", "--prime", "5", "--format", "text"])
    assert code == 0
    assert out.strip() == "|X(F_5)| = 9"


def test_output_file(tmp_path):
    target = tmp_path / "jet.json"
    code, out, _ = run(["jet", "--preset", "node", "--n", "2", "--output", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["length"] == 3


# --- Тест 3: ошибки и коды выхода ---
def test_parse_error_exit_code():
    code, out, err = run(["jet", "--preset", "cusp", "--n", "-1"])
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"]["code"] == "parse_error"


def test_bad_polynomial_exit_code():
    code, _, err = run(["count", "--vars", "x", "--gens", "x^^2", "--prime", "3"])
    assert code == 2
    assert json.loads(err)["error"]["code"] == "parse_error"


def test_precondition_exit_code():
    code, _, err = run(["jet", "--preset", "node", "--point", "1,1", "--n", "2"])
    assert code == 3
    assert json.loads(err)["error"]["details"]["point"] == ["1", "1"]


def test_budget_exit_code():
    code, _, err = run([
        "count", "--vars", "x,y,z", "--gens", "x*y*z", "--prime", "7", "--budget-points", "10",
    ])
    assert code == 4
    assert json.loads(err)["error"]["details"]["budget"] == "points"


def test_verify_failure_exit_code():
    from src.engines.VerifyEngine import suites

    def failing(golden_dir, budgets):
        return [suites.criterion("fake", False, 1, 2)]

    with pytest.MonkeyPatch().context() as mp:
        mp.setitem(suites.SUITE_RUNNERS, "structure", failing)
        code, out, err = run(["verify", "structure"])
    assert code == 5
    assert json.loads(out)["failed"] == 1
    assert json.loads(err)["error"]["code"] == "verification_mismatch"
