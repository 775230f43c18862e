# src/engines/ArcEngine/core.py
"""
ArcEngine — построение струй, пространств дуг и автодуг.

Операции (папка operations/):
  - jet:  n-струя схемы в точке (толстая точка);
  - arc:  пространство дуг схемы над заданной толстой точкой;
  - auto: пространство автодуг A_n(X, p) = ∇_{J^n} J^n.

Пример:
>>> engine = registry.instantiate_engine("ArcEngine")
>>> result = engine.execute_operation("jet", {"command": "jet", "scheme": {"preset": "cusp"}, "order": 4})
>>> result.output["length"]
7
"""

from __future__ import annotations
import logging
from typing import Any, Dict, Optional

from src.engines.base import BaseEngine
from src.model.jobs import JobSpec

LOG = logging.getLogger(__name__)


class ArcEngine(BaseEngine):
    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super().__init__(descriptor, config)
        LOG.debug("ArcEngine инициализирован.")

    @staticmethod
    def scheme_and_point(job: JobSpec):
        """Схема задания и её точка (None — начало координат)."""
        return job.scheme.build(), job.scheme.point
