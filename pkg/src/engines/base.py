# src/engines/base.py
# coding: utf-8
"""
BaseEngine — базовый класс для всех движков.
ОСНОВНЫЕ ПРИНЦИПЫ:
1. Движки НЕ требуют ручной инициализации — операции загружаются при первом execute_operation.
2. Операции размещаются в папке operations/ рядом с core.py: каждый файл <operation_name>.py
   содержит класс Operation, унаследованный от BaseOperation. Имя файла совпадает с командой CLI.
3. Ошибки ArcMotivesError переводятся в EngineResult.error с кодом и exit_code; прочие исключения
   логируются и получают exit_code 1.

СТРУКТУРА ДВИЖКА:
src/engines/ZetaEngine/
├── __init__.py
├── core.py                 # class ZetaEngine(BaseEngine)
└── operations/
    ├── zeta.py             # class Operation(BaseOperation): ...
    └── theta.py

КОНФИГУРАЦИЯ:
В реестре (engine_registry.py или control_registry.py) указывается
{"config": {"cache_dsn": "...", ...}}; значение доступно операциям как engine.config.

ПРИМЕР:
engine = registry.instantiate_engine("ZetaEngine")
result = engine.execute_operation("zeta", job.model_dump(mode="json"))
"""

from __future__ import annotations
import importlib.util
import inspect
import logging
import time
from pathlib import Path
from typing import Any, Dict, Optional

from src.engines.operations_base import BaseOperation
from src.model.engine_result import EngineResult
from src.model.errors import ArcMotivesError

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


def _load_operation_classes(module_path: str) -> Dict[str, type]:
    """Классы Operation из папки operations/ рядом с модулем движка."""
    spec = importlib.util.find_spec(module_path)
    if spec is None or spec.origin is None:
        raise ValueError(f"Не удалось найти origin для модуля {module_path}")
    operations_dir = Path(spec.origin).resolve().parent / "operations"
    if not operations_dir.exists():
        LOG.debug("Папка operations не найдена для %s", module_path)
        return {}

    ops: Dict[str, type] = {}
    for op_file in sorted(operations_dir.glob("*.py")):
        if op_file.name.startswith("_"):
            continue
        op_name = op_file.stem
        try:
            spec_op = importlib.util.spec_from_file_location(f"{module_path}.operations.{op_name}", op_file)
            if spec_op is None or spec_op.loader is None:
                LOG.warning("Не удалось создать spec для %s", op_file)
                continue
            mod = importlib.util.module_from_spec(spec_op)
            spec_op.loader.exec_module(mod)
            op_cls = getattr(mod, "Operation", None)
            if op_cls is None:
                LOG.error("Файл %s не содержит класса 'Operation'", op_file)
                continue
            if not (inspect.isclass(op_cls) and issubclass(op_cls, BaseOperation)):
                LOG.error("Operation в %s не наследуется от BaseOperation", op_file)
                continue
            ops[op_name] = op_cls
            LOG.debug("Загружена операция %s (%s)", op_name, module_path)
        except Exception as e:
            LOG.exception("Ошибка загрузки операции %s из %s: %s", op_name, op_file, e)
    return ops


class BaseEngine:
    """
    Атрибуты:
        descriptor: метаданные движка из реестра (name, title, description, implementation).
        config: конфигурация из поля "config" реестра.
        _operations: кэш классов операций из папки operations/.
    """

    _REQUIRED_DESCRIPTOR_KEYS = {"name", "title", "description", "implementation"}

    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        if not isinstance(descriptor, dict):
            raise ValueError("descriptor must be a dict (EngineEntry).")
        missing = self._REQUIRED_DESCRIPTOR_KEYS - set(descriptor.keys())
        if missing:
            raise ValueError(f"descriptor missing required keys: {sorted(missing)}")

        self.descriptor: Dict[str, Any] = descriptor
        self.config: Dict[str, Any] = dict(config or {})
        self._operations: Dict[str, type] = {}
        self._initialized: bool = False
        LOG.debug("BaseEngine инициализирован: %s", self.name)

    @property
    def name(self) -> str:
        return str(self.descriptor["name"])

    @property
    def title(self) -> str:
        return str(self.descriptor.get("title", self.name))

    @property
    def description(self) -> str:
        return str(self.descriptor.get("description", ""))

    # -------------------------
    # Ленивая инициализация
    # -------------------------

    def _lazy_initialize(self) -> None:
        if self._initialized:
            return
        self._operations = _load_operation_classes(self.__class__.__module__)
        self._initialized = True
        LOG.debug("Движок %s: операции %s", self.name, sorted(self._operations))

    @property
    def operations(self) -> Dict[str, type]:
        self._lazy_initialize()
        return dict(self._operations)

    @classmethod
    def discover_operations(cls, descriptor: Dict[str, Any]) -> Dict[str, Any]:
        """Манифесты операций без создания экземпляра (для EngineRegistry)."""
        impl = descriptor.get("implementation")
        if not impl or ":" not in impl:
            return {}
        module_path, _ = impl.rsplit(":", 1)
        try:
            return {name: op.get_manifest() for name, op in _load_operation_classes(module_path).items()}
        except Exception as e:
            LOG.debug("Не удалось загрузить операции для модуля %s: %s", module_path, e)
            return {}

    # -------------------------
    # Выполнение операций
    # -------------------------

    def execute_operation(
        self,
        operation: str,
        params: Optional[Dict[str, Any]] = None,
        context: Optional[Dict[str, Any]] = None,
    ) -> EngineResult:
        """
        Выполняет операцию движка и оборачивает результат в EngineResult.

        Raises:
            KeyError: если операция не найдена.
        """
        self._lazy_initialize()
        if operation not in self._operations:
            available = sorted(self._operations)
            raise KeyError(f"Операция '{operation}' не найдена у движка '{self.name}'. Доступны: {available}")

        params = params or {}
        context = context or {}
        op_cls = self._operations[operation]
        start = time.time()
        try:
            result = op_cls().run(params, context, self)
            if not isinstance(result, EngineResult):
                raise TypeError(f"Операция должна вернуть EngineResult, получено: {type(result)}")
        except ArcMotivesError as exc:
            LOG.info("Движок %s, операция %s: %s (%s)", self.name, operation, exc.message, exc.code)
            result = EngineResult.error(
                exc.message,
                stage=op_cls.stage,
                code=exc.code,
                exit_code=exc.exit_code,
                details=exc.details,
                output=context.get("partial_output"),
            )
        except Exception as exc:
            LOG.exception("Движок %s: ошибка при выполнении операции %s", self.name, operation)
            result = EngineResult.error(
                f"Операция '{operation}' завершилась с ошибкой: {exc}",
                stage=op_cls.stage,
                details={"type": type(exc).__name__},
            )

        if result.engine is None:
            result.engine = self.name
        if result.operation is None:
            result.operation = operation
        if result.input_params is None and isinstance(params, dict):
            result.input_params = params
        result.metadata.setdefault("elapsed_s", time.time() - start)
        return result

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "title": self.title,
            "description": self.description,
            "operations": {name: op.get_manifest() for name, op in sorted(self.operations.items())},
            "config_keys": sorted(self.config.keys()),
        }
