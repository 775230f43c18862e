# src/model/errors.py
# coding: utf-8
"""
Иерархия ошибок arc-motives.

Каждая ошибка несёт стабильный машиночитаемый код (``code``), словарь деталей
(``details``) и код завершения процесса (``exit_code``), который использует CLI:

  - ParseError           -> 2  (грамматика многочленов, невалидный JobSpec)
  - PreconditionError    -> 3  (математические предусловия, включая подклассы)
  - BudgetExceededError  -> 4  (исчерпан бюджет шагов / перебора)
  - VerificationError    -> 5  (расхождение в наборе проверок verify)

Непредвиденные исключения CLI отображает в код 1.
"""

from __future__ import annotations
from typing import Any, Dict, Optional


class ArcMotivesError(Exception):
    """Базовая ошибка проекта."""

    code: str = "internal_error"
    exit_code: int = 1

    def __init__(self, message: str, code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        if code:
            self.code = code
        self.details: Dict[str, Any] = dict(details or {})

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}


class ParseError(ArcMotivesError):
    code = "parse_error"
    exit_code = 2


class PreconditionError(ArcMotivesError):
    code = "precondition"
    exit_code = 3


class RingMismatchError(PreconditionError):
    code = "ring_mismatch"


class InfiniteQuotientError(PreconditionError):
    code = "infinite_quotient"


class NonLocalFatPointError(PreconditionError):
    code = "non_local_fat_point"


class PointNotOnSchemeError(PreconditionError):
    code = "point_not_on_scheme"


class InterpolationError(PreconditionError):
    """Проверочное простое не подтвердило интерполированный класс."""

    code = "interpolation_mismatch"


class NonUnitConstantError(PreconditionError):
    code = "non_unit_constant"


class TruncationError(PreconditionError):
    code = "incompatible_truncation"


class BudgetExceededError(ArcMotivesError):
    """
    Исчерпан ресурсный бюджет. Это не математическая ошибка: тот же вход
    с бо́льшим бюджетом может завершиться успешно.
    """

    code = "budget_exceeded"
    exit_code = 4

    def __init__(self, budget: str, limit: int, message: Optional[str] = None, **details: Any):
        text = message or f"Бюджет '{budget}' исчерпан (лимит {limit})"
        super().__init__(text, details={"budget": budget, "limit": limit, **details})
        self.budget = budget
        self.limit = limit


class VerificationError(ArcMotivesError):
    code = "verification_mismatch"
    exit_code = 5
