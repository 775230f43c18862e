# tests/engines/test_registry.py
# coding: utf-8
"""
Тесты EngineRegistry и BaseEngine: валидация реестров, поиск движка по операции,
ленивая загрузка операций, перевод ошибок в EngineResult.
"""
import pytest

from src.common.control_registry import CONTROL_REGISTRY
from src.common.engine_registry import ENGINE_REGISTRY
from src.engines.base import BaseEngine
from src.engines.operations_base import BaseOperation
from src.engines.registry import EngineRegistry
from src.model.engine_result import EngineResult


@pytest.fixture
def registry():
    return EngineRegistry()


# --- Тест 1: реестры ---
def test_default_registries_are_loaded(registry):
    assert set(registry.list_engines(control=False)) == set(ENGINE_REGISTRY)
    assert set(registry.list_engines(control=True)) == set(CONTROL_REGISTRY)
    assert registry.is_control_engine("VerifyEngine")


def test_validate_all_passes(registry):
    registry.validate_all()


@pytest.mark.parametrize(
    "operation, engine",
    [
        ("arc", "ArcEngine"),
        ("jet", "ArcEngine"),
        ("auto", "ArcEngine"),
        ("reduce", "ReductionEngine"),
        ("count", "MotiveEngine"),
        ("zeta", "ZetaEngine"),
        ("theta", "ZetaEngine"),
        ("verify", "VerifyEngine"),
    ],
)
def test_every_command_has_one_engine(registry, operation, engine):
    found = registry.find_engines_by_operation(operation)
    assert [name for name, _ in found] == [engine]


def test_manifest_shape(registry):
    manifest = registry.get_operation("VerifyEngine", "verify")
    assert manifest["kind"] == "validation"
    assert manifest["stage"] == "verification"
    assert manifest["description"]


def test_unknown_engine(registry):
    with pytest.raises(KeyError):
        registry.get_engine_entry("NoSuchEngine")


def test_bad_implementation_string():
    reg = EngineRegistry(engine_registry={
        "Broken": {"name": "Broken", "title": "x", "description": "x", "implementation": "no_colon"},
    }, control_registry={})
    with pytest.raises(ValueError):
        reg.validate_all()


def test_name_must_match_key():
    entry = dict(ENGINE_REGISTRY["ArcEngine"], name="Other")
    reg = EngineRegistry(engine_registry={"ArcEngine": entry}, control_registry={})
    with pytest.raises(ValueError):
        reg.validate_all()


def test_describe_lists_operations(registry):
    described = registry.describe()
    assert sorted(described["ZetaEngine"]["operations"]) == ["theta", "zeta"]
    assert described["VerifyEngine"]["control"] is True


# --- Тест 2: движки ---
def test_instantiate_passes_config(registry):
    engine = registry.instantiate_engine("MotiveEngine", override_config={"cache_dsn": "sqlite:///:memory:"})
    assert isinstance(engine, BaseEngine)
    assert engine.cache_dsn == "sqlite:///:memory:"


def test_descriptor_requires_keys():
    with pytest.raises(ValueError):
        BaseEngine({"name": "X"})


def test_unknown_operation(registry):
    engine = registry.instantiate_engine("ArcEngine")
    with pytest.raises(KeyError):
        engine.execute_operation("zeta", {})


def test_parse_error_becomes_result(registry):
    engine = registry.instantiate_engine("ArcEngine")
    result = engine.execute_operation("jet", {"command": "jet"})
    assert isinstance(result, EngineResult)
    assert result.status == "error"
    assert result.code == "parse_error"
    assert result.exit_code == 2
    assert result.engine == "ArcEngine" and result.operation == "jet"
    assert "elapsed_s" in result.metadata


def test_precondition_error_becomes_result(registry):
    engine = registry.instantiate_engine("ArcEngine")
    result = engine.execute_operation(
        "jet", {"command": "jet", "scheme": {"preset": "node", "point": ["1", "1"]}, "order": 2},
    )
    assert result.code == "point_not_on_scheme"
    assert result.exit_code == 3
    assert result.error_payload()["error"]["details"]["point"] == ["1", "1"]


def test_unexpected_error_maps_to_exit_one(registry, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("сбой")

    monkeypatch.setattr("src.engines.ArcEngine.core.ArcEngine.scheme_and_point", staticmethod(boom))
    engine = registry.instantiate_engine("ArcEngine")
    result = engine.execute_operation("jet", {"command": "jet", "scheme": {"preset": "node"}, "order": 2})
    assert result.status == "error"
    assert result.code == "internal_error"
    assert result.exit_code == 1
    assert result.metadata["details"] == {"type": "RuntimeError"}


# --- Тест 3: манифест операции ---
def test_operation_with_unknown_stage_is_rejected():
    with pytest.raises(ValueError):
        class Operation(BaseOperation):
            stage = "painting"
            description = "x"

            def run(self, params, context, engine):
                return EngineResult.ok(stage=self.stage)


def test_operation_without_description_is_rejected():
    with pytest.raises(ValueError):
        class Operation(BaseOperation):
            stage = "construction"

            def run(self, params, context, engine):
                return EngineResult.ok(stage=self.stage)
