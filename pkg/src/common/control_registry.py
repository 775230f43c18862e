# src/common/control_registry.py
# coding: utf-8
"""
CONTROL_REGISTRY — реестр контрольных движков.
Формат записи тот же, что и в ENGINE_REGISTRY (см. src/common/engine_registry.py),
чтобы EngineRegistry валидировал оба реестра одним способом.

Правила:
- Контрольные движки не выполняют вычислений по заданию пользователя: они
  запускают наборы проверок поверх вычислительных сервисов.
- Провал проверки — EngineResult.error с кодом verification_mismatch (exit 5),
  отчёт кладётся в output.
"""

from typing import Any, Dict

from src.common import settings

CONTROL_REGISTRY: Dict[str, Any] = {
    "VerifyEngine": {
        "name": "VerifyEngine",
        "title": "Проверки (VerifyEngine)",
        "description": (
            "Наборы проверок: эталонные таблицы уравнений, структура редукций, "
            "классы, ряды и общие свойства."
        ),
        "implementation": "src.engines.VerifyEngine.core:VerifyEngine",
        "config": {"golden_dir": str(settings.GOLDEN_DIR)},
        "meta": {"role": "control"},
    },
}
