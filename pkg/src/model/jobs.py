# src/model/jobs.py
# coding: utf-8
"""
Модели заданий (pydantic): описания схем, толстых точек, бюджетов,
стратегии назначения классов, конфигурации рядов и JobSpec целиком.

JobSpec — это то, что лежит в файле --script; флаги CLI собираются
в ту же модель.
"""

from __future__ import annotations
import enum
from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from src.common import settings
from src.model.errors import ParseError

COMMANDS = ("arc", "jet", "auto", "reduce", "zeta", "theta", "count", "verify", "describe")
SUITES = ("paper-tables", "structure", "classes", "zeta", "properties")


class Normalization(str, enum.Enum):
    DEFINITION = "definition"
    CODIM = "codim"

    def __str__(self) -> str:
        return self.value


class SchemeSpec(BaseModel):
    """Схема: предустановка или переменные + образующие; точка по умолчанию — начало координат."""

    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = Field(default=None, description="Имя предустановки (cusp, node, A2, cusp(m,l), ...)")
    variables: List[str] = Field(default_factory=list, description="Имена переменных")
    generators: List[str] = Field(default_factory=list, description="Образующие идеала")
    point: Optional[List[str]] = Field(default=None, description="Координаты точки (строки: целые или p/q)")
    field: str = Field(default="QQ", description="Поле коэффициентов: QQ или GF(p)")

    @model_validator(mode="after")
    def _check_source(self) -> "SchemeSpec":
        if self.preset is None and not self.variables and self.generators:
            raise ValueError("образующие заданы без переменных")
        return self

    def build(self) -> Any:
        from src.services.algebra_service.fields import CoefficientField
        from src.services.arc_service.scheme import AffineScheme, preset

        field = CoefficientField.from_text(self.field)
        if self.preset:
            return preset(self.preset, field)
        return AffineScheme.from_strings(self.variables, self.generators, field)


class FatPointSpec(BaseModel):
    """Толстая точка: линейная l_m (length) или явное представление."""

    model_config = ConfigDict(extra="forbid")

    length: Optional[int] = Field(default=None, ge=1, description="m для линейной толстой точки l_m")
    variables: List[str] = Field(default_factory=list)
    generators: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_source(self) -> "FatPointSpec":
        if self.length is None and not self.variables:
            raise ValueError("нужна длина l_m либо переменные и образующие")
        return self

    def build(self, field: Any) -> Any:
        from src.services.arc_service.fat_point import fat_point_from_strings, linear_fat_point

        if self.length is not None:
            return linear_fat_point(self.length, field)
        return fat_point_from_strings(self.variables, self.generators, field)


class Budgets(BaseModel):
    points: int = Field(default_factory=lambda: settings.BUDGET_POINTS, ge=1, description="Лимит перебора точек")
    groebner: int = Field(default_factory=lambda: settings.BUDGET_GROEBNER, ge=1, description="Лимит шагов редукции")
    workers: int = Field(default_factory=lambda: settings.COUNT_WORKERS, ge=1, description="Процессы подсчёта")


class ClassStrategy(BaseModel):
    """Как назначать классы: интерполяцией по подсчётам точек или готовым списком."""

    kind: Literal["interpolate", "supplied"] = "interpolate"
    degree_bound: Optional[int] = Field(default=None, ge=0, description="Граница степени; по умолчанию размерность фактора")
    excluded_primes: List[int] = Field(default_factory=list)
    start_prime: int = Field(default=2, ge=2)
    supplied: List[str] = Field(default_factory=list, description="Классы по степеням t (записи вида 3*L^2 - 2*L)")
    require_confirmed: bool = Field(default=False, description="Сверять числа F_p-точек и для уровней с подтверждёнными убийствами")

    def supplied_classes(self) -> List[Any]:
        from src.services.motive_service.motive_class import MotiveClass

        return [MotiveClass.from_text(text) for text in self.supplied]


class ZetaConfig(BaseModel):
    scheme: SchemeSpec
    order: int = Field(ge=1, description="Наибольший показатель t (N)")
    normalization: Normalization = Normalization.DEFINITION
    strategy: ClassStrategy = Field(default_factory=ClassStrategy)
    budgets: Budgets = Field(default_factory=Budgets)


class JobSpec(BaseModel):
    """Одно задание CLI."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["arc", "jet", "auto", "reduce", "zeta", "theta", "count", "verify", "describe"]
    scheme: Optional[SchemeSpec] = None
    fat: Optional[FatPointSpec] = None
    order: Optional[int] = Field(default=None, ge=1)
    prime: Optional[int] = Field(default=None, ge=2)
    budgets: Budgets = Field(default_factory=Budgets)
    strategy: ClassStrategy = Field(default_factory=ClassStrategy)
    normalization: Normalization = Normalization.DEFINITION
    closed_form: Optional[str] = Field(default=None, description="Имя напечатанной замкнутой формы для сравнения")
    certify: bool = True
    suite: Optional[str] = None
    output: Optional[str] = None
    format: Literal["json", "text"] = "json"

    @field_validator("suite")
    @classmethod
    def _check_suite(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in SUITES:
            raise ValueError(f"неизвестный набор проверок {value!r}; доступны {list(SUITES)}")
        return value

    @model_validator(mode="after")
    def _check_command(self) -> "JobSpec":
        needs_scheme = {"arc", "jet", "auto", "reduce", "zeta", "theta", "count"}
        if self.command in needs_scheme and self.scheme is None:
            raise ValueError(f"команда {self.command} требует схему")
        if self.command in {"jet", "auto", "reduce", "zeta", "theta"} and self.order is None:
            raise ValueError(f"команда {self.command} требует порядок --n")
        if self.command == "arc" and self.fat is None:
            raise ValueError("команда arc требует толстую точку")
        if self.command == "verify" and self.suite is None:
            raise ValueError("команда verify требует имя набора")
        return self

    @classmethod
    def parse(cls, data: Any) -> "JobSpec":
        """Валидация с переводом ошибок pydantic в ParseError."""
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            raise ParseError(
                "Невалидное задание",
                details={"errors": [{"loc": list(e["loc"]), "msg": e["msg"]} for e in exc.errors()]},
            ) from exc
