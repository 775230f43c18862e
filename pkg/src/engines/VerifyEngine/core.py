# src/engines/VerifyEngine/core.py
"""
VerifyEngine — контрольный движок наборов проверок.

Конфигурация:
  - golden_dir: каталог эталонных таблиц (по умолчанию settings.GOLDEN_DIR).

Пример:
>>> engine = registry.instantiate_engine("VerifyEngine")
>>> result = engine.execute_operation("verify", {"command": "verify", "suite": "structure"})
>>> result.exit_code   # 0 или 5
"""

from __future__ import annotations
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from src.common import settings
from src.engines.base import BaseEngine
from src.engines.VerifyEngine.suites import SuiteReport, run_suite
from src.model.jobs import Budgets

LOG = logging.getLogger(__name__)


class VerifyEngine(BaseEngine):
    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super().__init__(descriptor, config)
        LOG.debug("VerifyEngine инициализирован (эталоны: %s).", self.golden_dir)

    @property
    def golden_dir(self) -> Path:
        return Path(self.config.get("golden_dir") or settings.GOLDEN_DIR)

    def run_suite(self, suite: str, budgets: Optional[Budgets] = None) -> SuiteReport:
        return run_suite(suite, self.golden_dir, budgets)
