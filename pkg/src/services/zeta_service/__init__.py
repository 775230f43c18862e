# src/services/zeta_service/__init__.py
"""
Сборка производящих рядов, опорные замкнутые формы и сверка с ними.
"""
from src.services.zeta_service.assembly import (
    AutoPoincare,
    DefectReport,
    LevelResult,
    ZetaComputation,
    asymptotic_defect,
    auto_arc_level,
    auto_poincare,
    auto_zeta,
    checked_reduction,
    compute_auto_zeta,
    igusa_zeta,
    igusa_theta,
)
from src.services.zeta_service.compare import SeriesReport, Verdict, compare, find_shift, render_table
from src.services.zeta_service.reference import PRINTED, PRINTED_DEFECTS, printed_defect, printed_form, structural_classes

__all__ = [
    "AutoPoincare",
    "DefectReport",
    "LevelResult",
    "ZetaComputation",
    "asymptotic_defect",
    "auto_arc_level",
    "auto_poincare",
    "auto_zeta",
    "checked_reduction",
    "compute_auto_zeta",
    "igusa_zeta",
    "igusa_theta",
    "SeriesReport",
    "Verdict",
    "compare",
    "find_shift",
    "render_table",
    "PRINTED",
    "PRINTED_DEFECTS",
    "printed_defect",
    "printed_form",
    "structural_classes",
]
