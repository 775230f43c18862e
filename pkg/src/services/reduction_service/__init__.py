# src/services/reduction_service/__init__.py
"""
Эвристическая редукция пространств дуг и разложение на аффинную часть и факторы.
"""
from src.services.reduction_service.decompose import Decomposition, decompose, is_affine_space
from src.services.reduction_service.heuristic import ReducedPresentation, ReductionFlag, certify_kills, heuristic_reduce

__all__ = [
    "Decomposition",
    "ReducedPresentation",
    "ReductionFlag",
    "certify_kills",
    "decompose",
    "heuristic_reduce",
    "is_affine_space",
]
