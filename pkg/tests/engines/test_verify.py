# tests/engines/test_verify.py
# coding: utf-8
"""
Тесты VerifyEngine: отчёт набора, код выхода 5 при проваленном критерии,
статус discrepancy не влияет на результат.
"""
import pytest

from src.common import settings
from src.engines.registry import EngineRegistry
from src.engines.VerifyEngine import suites
from src.engines.VerifyEngine.suites import SuiteReport, criterion, run_suite
from src.model.errors import ParseError
from src.model.jobs import Budgets
from src.services.motive_service.series import poly_product, poly_to_strings


@pytest.fixture
def engine():
    return EngineRegistry().instantiate_engine("VerifyEngine")


def fake_runner(*statuses):
    def runner(golden_dir, budgets):
        return [
            criterion(f"fake/{i}", status == "pass", 1, 1 if status == "pass" else 2, known=status == "discrepancy")
            for i, status in enumerate(statuses)
        ]
    return runner


# --- Тест 1: отчёт ---
def test_report_counts():
    report = SuiteReport("x", [
        criterion("a", True, 1, 1),
        criterion("b", False, 1, 2, known=True),
        criterion("c", False, 1, 2),
    ])
    data = report.to_json()
    assert (data["passed"], data["discrepancies"], data["failed"]) == (1, 1, 1)
    assert not report.ok


def test_guarded_criterion_turns_error_into_fail():
    def broken():
        raise ParseError("плохая таблица")

    (result,) = suites._guarded("broken", broken)
    assert result["status"] == "fail"
    assert result["details"]["error"]["code"] == "parse_error"


# --- Тест 2: коды выхода ---
def test_passing_suite(engine):
    with pytest.MonkeyPatch().context() as mp:
        mp.setitem(suites.SUITE_RUNNERS, "structure", fake_runner("pass", "discrepancy"))
        result = engine.execute_operation("verify", {"command": "verify", "suite": "structure"})
    assert result.ok_status
    assert result.exit_code == 0
    assert result.output["discrepancies"] == 1


def test_failing_suite_exits_with_five(engine):
    with pytest.MonkeyPatch().context() as mp:
        mp.setitem(suites.SUITE_RUNNERS, "classes", fake_runner("pass", "fail"))
        result = engine.execute_operation("verify", {"command": "verify", "suite": "classes"})
    assert result.status == "error"
    assert result.code == "verification_mismatch"
    assert result.exit_code == 5
    assert result.metadata["details"] == {"suite": "classes", "failed": ["fake/1"]}
    # отчёт остаётся в output
    assert result.output["failed"] == 1


def test_unknown_suite_is_parse_error(engine):
    result = engine.execute_operation("verify", {"command": "verify", "suite": "everything"})
    assert result.exit_code == 2


# --- Тест 3: настоящий набор ---
def test_printed_tables_suite_has_no_failures():
    report = run_suite("paper-tables", settings.GOLDEN_DIR)
    assert report.ok, [c for c in report.criteria if c["status"] == "fail"]
    names = {c["name"] for c in report.criteria}
    assert "node_2/equations" in names
    assert "cusp_4/reduced" in names


def test_structure_records_kill_certificates():
    kills, rank = suites._structure_node(2, Budgets())
    assert kills["name"] == "node/A2/kills"
    assert kills["status"] == "pass"
    assert len(kills["computed"]) == 2
    assert all(isinstance(e, int) for e in kills["computed"].values())
    assert rank["status"] == "pass"


def test_cusp_count_soundness_starts_at_seven():
    (result,) = suites._count_soundness("cusp", 2, Budgets())
    assert result["status"] == "pass"
    assert result["computed"] is True
    assert result["details"]["prime"] == 7
    assert result["details"]["kills_certified"] is True


def test_node_rationality_denominator_is_a_discrepancy():
    rationality, denominator = suites._rationality("node", Budgets())
    assert rationality["status"] == "pass"
    assert denominator["name"] == "node/rationality/denominator"
    assert denominator["status"] == "discrepancy"
    assert denominator["expected"] == poly_to_strings(suites.RATIONALITY_TARGETS["node"])
    assert denominator["computed"] == poly_to_strings(poly_product([[1, -1]] * 3))
