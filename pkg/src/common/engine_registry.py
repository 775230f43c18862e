# src/common/engine_registry.py
# coding: utf-8
"""
ENGINE_REGISTRY — реестр вычислительных движков (EngineEntry).

EngineEntry:
{
  "name": "<string>",             # повторяет ключ; используется в логах и describe
  "title": "<string>",            # человекочитаемое имя
  "description": "<string>",      # назначение и ограничения
  "implementation": "<module:Class>",
  "config": {...},                # передаётся в конструктор движка (optional)
  "meta": {...}                   # только для документации (optional)
}

Операции движков не перечисляются здесь: каждая лежит в operations/<команда>.py
рядом с core.py и находится при первом обращении.
"""

from typing import Any, Dict

from src.common import settings

ENGINE_REGISTRY: Dict[str, Any] = {
    "ArcEngine": {
        "name": "ArcEngine",
        "title": "Пространства дуг (ArcEngine)",
        "description": (
            "Струи схем в точке, пространства дуг над толстыми точками и пространства автодуг.\n"
            "Команды arc, jet, auto."
        ),
        "implementation": "src.engines.ArcEngine.core:ArcEngine",
        "config": {},
        "meta": {"stage": "construction"},
    },

    "ReductionEngine": {
        "name": "ReductionEngine",
        "title": "Редукция (ReductionEngine)",
        "description": "Эвристическая редукция пространства дуг или автодуг и разложение на аффинную часть и факторы.",
        "implementation": "src.engines.ReductionEngine.core:ReductionEngine",
        "config": {},
        "meta": {"stage": "reduction"},
    },

    "MotiveEngine": {
        "name": "MotiveEngine",
        "title": "Подсчёт точек и классы (MotiveEngine)",
        "description": (
            "Точный подсчёт F_p-точек аффинной схемы; без простого — класс в Z[L] "
            "интерполяцией по нескольким простым."
        ),
        "implementation": "src.engines.MotiveEngine.core:MotiveEngine",
        "config": {"cache_dsn": settings.COUNT_CACHE_DSN},
        "meta": {"stage": "counting"},
    },

    "ZetaEngine": {
        "name": "ZetaEngine",
        "title": "Производящие ряды (ZetaEngine)",
        "description": (
            "Редуцированный авто-ряд и ряд Θ вдоль линейных струй; сверка с напечатанными "
            "замкнутыми формами и распознавание рациональности."
        ),
        "implementation": "src.engines.ZetaEngine.core:ZetaEngine",
        "config": {"max_den_degree": settings.RATIONALITY_MAX_DEGREE},
        "meta": {"stage": "assembly"},
    },
}
