# src/engines/MotiveEngine/core.py
"""
MotiveEngine — подсчёт F_p-точек и назначение классов в Z[L].

Конфигурация:
  - cache_dsn: SQLAlchemy URL кэша подсчётов (пустая строка — без кэша).
"""

from __future__ import annotations
import logging
from typing import Any, Dict, Optional

from src.engines.base import BaseEngine

LOG = logging.getLogger(__name__)


class MotiveEngine(BaseEngine):
    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super().__init__(descriptor, config)
        LOG.debug("MotiveEngine инициализирован (кэш: %s).", "да" if self.cache_dsn else "нет")

    @property
    def cache_dsn(self) -> str:
        return str(self.config.get("cache_dsn") or "")
