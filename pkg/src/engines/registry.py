# src/engines/registry.py
# coding: utf-8
"""
EngineRegistry — менеджер реестра движков (вычислительные и контрольные).
Назначение:
- Единый программный интерфейс доступа к ENGINE_REGISTRY и CONTROL_REGISTRY.
- Валидация записей по схеме EngineEntry.
- Импорт и инстанцирование реализаций (implementation: "module:Class").
- Поиск движка по имени операции: CLI знает только команду (arc, zeta, verify, ...).

Операции в дескрипторе не перечисляются: они загружаются из папки operations/
рядом с core.py через BaseEngine.discover_operations(descriptor).

Пример:
>>> from src.engines.registry import EngineRegistry
>>> reg = EngineRegistry()
>>> reg.validate_all()
>>> engine = reg.engine_for_operation("zeta")
>>> result = engine.execute_operation("zeta", {"command": "zeta", ...})
"""
from __future__ import annotations
import importlib
import inspect
import logging
from typing import Any, Dict, List, Optional, Tuple

from src.engines.base import BaseEngine

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


def _load_registry_module(module_path: str) -> Optional[Dict[str, Any]]:
    """Импорт модуля-реестра; возвращает ENGINE_REGISTRY или CONTROL_REGISTRY."""
    try:
        mod = importlib.import_module(module_path)
    except Exception:
        LOG.debug("Модуль реестра %s не найден.", module_path)
        return None
    for varname in ("ENGINE_REGISTRY", "CONTROL_REGISTRY"):
        val = getattr(mod, varname, None)
        if isinstance(val, dict):
            LOG.debug("Загружен реестр %s из %s", varname, module_path)
            return val
    LOG.debug("Модуль %s импортирован, но не содержит ENGINE_REGISTRY/CONTROL_REGISTRY.", module_path)
    return None


class EngineRegistry:
    """
    Управляет набором зарегистрированных движков.

    Если engine_registry/control_registry не переданы, импортируются
    src.common.engine_registry.ENGINE_REGISTRY и src.common.control_registry.CONTROL_REGISTRY.
    """
    _REQUIRED_TOP_LEVEL = {"name", "title", "description", "implementation"}
    _KINDS = ("direct", "validation", "control")

    def __init__(
        self,
        engine_registry: Optional[Dict[str, Dict[str, Any]]] = None,
        control_registry: Optional[Dict[str, Dict[str, Any]]] = None,
        validate_on_init: bool = False,
    ) -> None:
        if engine_registry is None:
            engine_registry = _load_registry_module("src.common.engine_registry") or {}
        if control_registry is None:
            control_registry = _load_registry_module("src.common.control_registry") or {}
        self.engine_registry = engine_registry
        self.control_registry = control_registry
        self._impl_cache: Dict[str, Any] = {}
        self._ops_cache: Dict[str, Dict[str, Any]] = {}
        if validate_on_init:
            self.validate_all()

    # -----------------------------
    # Базовые методы доступа
    # -----------------------------
    def _all_entries(self) -> Dict[str, Dict[str, Any]]:
        merged = dict(self.engine_registry)
        merged.update(self.control_registry)
        return merged

    def list_engines(self, control: Optional[bool] = None) -> List[str]:
        """Имена движков; control=None — все."""
        if control is None:
            return list(self._all_entries())
        reg = self.control_registry if control else self.engine_registry
        return list(reg)

    def get_engine_entry(self, name: str) -> Dict[str, Any]:
        entries = self._all_entries()
        if name not in entries:
            raise KeyError(f"Движок '{name}' не найден в реестре.")
        return entries[name]

    def is_control_engine(self, name: str) -> bool:
        return name in self.control_registry

    def _resolve_operations(self, name: str, entry: Dict[str, Any]) -> Dict[str, Any]:
        if name in self._ops_cache:
            return self._ops_cache[name]
        try:
            impl_obj = self.get_implementation(name)
            if not inspect.isclass(impl_obj) or not issubclass(impl_obj, BaseEngine):
                return {}
            ops = impl_obj.discover_operations(entry)
        except Exception as e:
            LOG.warning("Не удалось загрузить операции движка %s: %s", name, e)
            return {}
        self._ops_cache[name] = ops
        return ops

    def get_operation(self, engine_name: str, op_name: str) -> Dict[str, Any]:
        entry = self.get_engine_entry(engine_name)
        ops = self._resolve_operations(engine_name, entry)
        if op_name not in ops:
            raise KeyError(f"Операция '{op_name}' не найдена у движка '{engine_name}'.")
        return ops[op_name]

    def get_engine_operations(self, engine_name: str) -> List[str]:
        entry = self.get_engine_entry(engine_name)
        return list(self._resolve_operations(engine_name, entry))

    def find_engines_by_operation(self, op_name: str) -> List[Tuple[str, Dict[str, Any]]]:
        """Список (engine_name, entry) движков, реализующих операцию."""
        return [
            (name, entry)
            for name, entry in self._all_entries().items()
            if op_name in self._resolve_operations(name, entry)
        ]

    # -----------------------------
    # Импорт и инстанцирование
    # -----------------------------
    @staticmethod
    def _parse_implementation(impl: str) -> Tuple[str, str]:
        if not isinstance(impl, str) or ":" not in impl:
            raise ValueError(f"Invalid implementation format: {impl!r}. Expected 'module.path:Attr'.")
        module_path, attr = (part.strip() for part in impl.split(":", 1))
        if not module_path or not attr:
            raise ValueError(f"Invalid implementation format: {impl!r}. Expected 'module.path:Attr'.")
        return module_path, attr

    def _import_implementation(self, implementation: str) -> Any:
        if implementation in self._impl_cache:
            return self._impl_cache[implementation]
        module_path, attr = self._parse_implementation(implementation)
        try:
            module = importlib.import_module(module_path)
        except Exception as e:
            LOG.exception("Ошибка импорта модуля %s: %s", module_path, e)
            raise
        if not hasattr(module, attr):
            LOG.error("Attribute %s not found in module %s", attr, module_path)
            raise AttributeError(f"Attribute {attr} not found in module {module_path}")
        impl_obj = getattr(module, attr)
        self._impl_cache[implementation] = impl_obj
        return impl_obj

    def get_implementation(self, engine_name: str) -> Any:
        entry = self.get_engine_entry(engine_name)
        impl = entry.get("implementation")
        if not impl:
            raise ValueError(f"Движок '{engine_name}' не содержит поля 'implementation'.")
        return self._import_implementation(impl)

    def instantiate_engine(self, engine_name: str, *, override_config: Optional[Dict[str, Any]] = None) -> BaseEngine:
        """Экземпляр движка с descriptor и config из реестра (или override_config)."""
        impl_obj = self.get_implementation(engine_name)
        entry = self.get_engine_entry(engine_name)
        config = override_config if override_config is not None else dict(entry.get("config") or {})
        if not (inspect.isclass(impl_obj) and issubclass(impl_obj, BaseEngine)):
            raise TypeError(f"Реализация движка '{engine_name}' не является BaseEngine: {impl_obj!r}")
        try:
            return impl_obj(descriptor=entry, config=config)
        except Exception as e:
            LOG.exception("Не удалось инстанцировать движок %s: %s", engine_name, e)
            raise

    def engine_for_operation(self, op_name: str, *, override_config: Optional[Dict[str, Any]] = None) -> BaseEngine:
        """Экземпляр единственного движка, реализующего операцию."""
        found = self.find_engines_by_operation(op_name)
        if not found:
            raise KeyError(f"Ни один движок не реализует операцию '{op_name}'.")
        if len(found) > 1:
            LOG.warning("Операцию %s реализуют несколько движков: %s", op_name, [n for n, _ in found])
        return self.instantiate_engine(found[0][0], override_config=override_config)

    # -----------------------------
    # Валидация структуры
    # -----------------------------
    def _validate_engine_entry(self, name: str, entry: Dict[str, Any]) -> None:
        missing = self._REQUIRED_TOP_LEVEL - set(entry)
        if missing:
            raise ValueError(f"Движок '{name}': нет обязательных полей {sorted(missing)}")
        if entry["name"] != name:
            raise ValueError(f"Движок '{name}': поле name ('{entry['name']}') не совпадает с ключом.")
        self._parse_implementation(entry["implementation"])

        operations = self._resolve_operations(name, entry)
        if not operations:
            raise ValueError(f"Движок '{name}': не найдено ни одной операции в папке operations/.")
        for op_name, op in operations.items():
            if op.get("kind") not in self._KINDS:
                raise ValueError(f"Движок '{name}', операция '{op_name}': недопустимый kind '{op.get('kind')}'.")
            desc = op.get("description")
            if not isinstance(desc, str) or not desc.strip():
                raise ValueError(f"Движок '{name}', операция '{op_name}': пустое description.")

    def validate_all(self) -> None:
        """Проверка всех записей; ValueError при первой проблеме или дублировании операции."""
        owners: Dict[str, str] = {}
        for name, entry in self._all_entries().items():
            self._validate_engine_entry(name, entry)
            for op_name in self._resolve_operations(name, entry):
                if op_name in owners:
                    raise ValueError(f"Операция '{op_name}' объявлена в '{owners[op_name]}' и '{name}'.")
                owners[op_name] = name
        LOG.info(
            "EngineRegistry: проверено %d движков и %d контрольных.",
            len(self.engine_registry), len(self.control_registry),
        )

    def describe(self) -> Dict[str, Any]:
        """Движки, их операции и роль; вывод команды describe."""
        return {
            name: {
                "title": entry.get("title"),
                "description": entry.get("description"),
                "control": self.is_control_engine(name),
                "operations": self._resolve_operations(name, entry),
            }
            for name, entry in sorted(self._all_entries().items())
        }
