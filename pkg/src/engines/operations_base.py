# src/engines/operations_base.py
# coding: utf-8
"""
BaseOperation — одна команда CLI внутри движка.

Файл operations/<команда>.py определяет `class Operation(BaseOperation)`.
Класс описывает себя атрибутами (kind, stage, description, params_schema,
outputs_schema); по ним строится манифест для `describe` и для проверки
реестра. Атрибуты проверяются при объявлении подкласса, так что ошибка в
манифесте обнаруживается уже при загрузке папки operations/.

Пример:
    class Operation(BaseOperation):
        stage = "construction"
        description = "n-струя схемы в точке"
        params_schema = {"scheme": {"type": "SchemeSpec", "required": True}}
        outputs_schema = {"length": "int"}

        def run(self, params, context, engine) -> EngineResult:
            job = self.job(params)
            ...

ArcMotivesError из run не перехватывается: её переводит в EngineResult.error
BaseEngine.execute_operation.
"""

from __future__ import annotations
import enum
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Union

from src.model.engine_result import EngineResult
from src.model.jobs import JobSpec

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

# Этапы вычисления; stage операции — один из них
STAGES = ("construction", "reduction", "counting", "assembly", "verification")


class OperationKind(str, enum.Enum):
    DIRECT = "direct"
    VALIDATION = "validation"
    CONTROL = "control"

    def __str__(self) -> str:
        return self.value


class BaseOperation(ABC):
    kind: OperationKind = OperationKind.DIRECT
    stage: str = "construction"
    description: str = ""
    params_schema: Dict[str, Any] = {}
    outputs_schema: Dict[str, Any] = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if not isinstance(cls.kind, OperationKind):
            raise TypeError(f"{cls.__module__}: kind должен быть OperationKind, получено {type(cls.kind).__name__}")
        if cls.stage not in STAGES:
            raise ValueError(f"{cls.__module__}: неизвестный этап {cls.stage!r}; допустимы {list(STAGES)}")
        if not isinstance(cls.description, str) or not cls.description.strip():
            raise ValueError(f"{cls.__module__}: пустое description")
        for attr in ("params_schema", "outputs_schema"):
            if not isinstance(getattr(cls, attr), dict):
                raise TypeError(f"{cls.__module__}: {attr} должен быть dict")

    @staticmethod
    def job(params: Union[Dict[str, Any], JobSpec]) -> JobSpec:
        """Параметры операции как JobSpec; ParseError, если словарь не проходит валидацию."""
        if isinstance(params, JobSpec):
            return params
        job = JobSpec.parse(params)
        LOG.debug("Операция %s: задание %s", job.command, job.model_dump(mode="json", exclude_defaults=True))
        return job

    @abstractmethod
    def run(self, params: Dict[str, Any], context: Dict[str, Any], engine) -> EngineResult:
        """Выполнение; engine — экземпляр движка-владельца (config, вспомогательные методы)."""

    @classmethod
    def get_manifest(cls) -> Dict[str, Any]:
        return {
            "kind": str(cls.kind),
            "stage": cls.stage,
            "description": cls.description,
            "params": cls.params_schema,
            "outputs": cls.outputs_schema,
        }
