# tests/model/test_engine_result.py
# coding: utf-8
"""
Тесты конверта EngineResult и иерархии ошибок.
"""
import pytest

from src.model.engine_result import EngineResult
from src.model.errors import (
    ArcMotivesError,
    BudgetExceededError,
    InterpolationError,
    ParseError,
    PreconditionError,
    VerificationError,
)


# --- Тест 1: EngineResult ---
def test_ok_result():
    result = EngineResult.ok(stage="construction", output={"length": 7})
    assert result.ok_status
    assert result.exit_code == 0
    data = result.to_dict()
    assert data["output"] == {"length": 7}
    assert "error" not in data


def test_error_result_carries_exit_code_and_details():
    result = EngineResult.error("нет", stage="counting", code="budget_exceeded", exit_code=4, details={"limit": 10})
    assert result.exit_code == 4
    assert result.error_payload() == {
        "error": {"code": "budget_exceeded", "message": "нет", "details": {"limit": 10}},
    }


def test_error_defaults_to_internal():
    result = EngineResult.error("сбой", stage="assembly")
    assert result.code == "internal_error"
    assert result.exit_code == 1


# --- Тест 2: ошибки ---
@pytest.mark.parametrize(
    "exc, code, exit_code",
    [
        (ParseError("x"), "parse_error", 2),
        (PreconditionError("x"), "precondition", 3),
        (InterpolationError("x"), "interpolation_mismatch", 3),
        (BudgetExceededError("points", 10), "budget_exceeded", 4),
        (VerificationError("x"), "verification_mismatch", 5),
        (ArcMotivesError("x"), "internal_error", 1),
    ],
)
def test_error_codes(exc, code, exit_code):
    assert exc.code == code
    assert exc.exit_code == exit_code
    assert exc.to_dict()["code"] == code


def test_budget_details():
    exc = BudgetExceededError("groebner", 5, prime=7)
    assert exc.details == {"budget": "groebner", "limit": 5, "prime": 7}
    assert "groebner" in exc.message
