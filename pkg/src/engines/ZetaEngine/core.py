# src/engines/ZetaEngine/core.py
"""
ZetaEngine — производящие ряды.

Операции:
  - zeta:  редуцированный авто-ряд (нормировки definition и codim);
  - theta: ряд Θ вдоль линейных струй.

Обе операции дополняют ряд распознанной рациональной функцией и, если в
задании указано имя напечатанной формы (closed_form), отчётом сверки.

Конфигурация:
  - max_den_degree: наибольшая степень знаменателя при распознавании рациональности.
"""

from __future__ import annotations
import logging
from typing import Any, Dict, Optional

from src.common import settings
from src.engines.base import BaseEngine
from src.model.jobs import JobSpec
from src.services.motive_service.rationality import detect_rationality
from src.services.motive_service.series import MotiveSeries
from src.services.zeta_service.compare import compare, render_table
from src.services.zeta_service.reference import printed_form

LOG = logging.getLogger(__name__)


class ZetaEngine(BaseEngine):
    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super().__init__(descriptor, config)
        LOG.debug("ZetaEngine инициализирован.")

    @property
    def max_den_degree(self) -> int:
        return int(self.config.get("max_den_degree") or settings.RATIONALITY_MAX_DEGREE)

    def annotate(self, series: MotiveSeries, job: JobSpec) -> Dict[str, Any]:
        """Рациональность и (если запрошено) сверка с напечатанной формой."""
        rational = detect_rationality(series, self.max_den_degree)
        extra: Dict[str, Any] = {"rationality": None if rational is None else rational.to_strings()}
        if job.closed_form:
            report = compare(series, printed_form(job.closed_form))
            extra["comparison"] = report.to_json()
            extra["table"] = render_table(report)
        return extra
