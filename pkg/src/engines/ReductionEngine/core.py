# src/engines/ReductionEngine/core.py
"""
ReductionEngine — редукция пространств дуг и автодуг.

Операция reduce строит A_n(X, p) (или ∇_fat X, если в задании есть толстая
точка), применяет эвристическую редукцию и раскладывает результат на
аффинную часть и остаточные факторы. Для небольших представлений редукция
дополнительно сверяется подсчётом F_p-точек.
"""

from __future__ import annotations
import logging
from typing import Any, Dict, Optional

from src.engines.base import BaseEngine
from src.model.jobs import JobSpec
from src.services.arc_service.arcs import ArcPresentation, arc_space, auto_arc

LOG = logging.getLogger(__name__)


class ReductionEngine(BaseEngine):
    def __init__(self, descriptor: Dict[str, Any], config: Optional[Dict[str, Any]] = None):
        super().__init__(descriptor, config)
        LOG.debug("ReductionEngine инициализирован.")

    @staticmethod
    def presentation(job: JobSpec) -> ArcPresentation:
        X = job.scheme.build()
        if job.fat is not None:
            return arc_space(X, job.fat.build(X.ring.field), job.budgets.groebner)
        return auto_arc(X, job.scheme.point, job.order, job.budgets.groebner)
