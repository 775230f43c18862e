# src/services/motive_service/__init__.py
"""
Классы в Z[L, L^-1], ряды и рациональные функции над ними,
подсчёт F_p-точек и интерполяция классов.
"""
from src.services.motive_service.counting import count_points, reduce_mod_p
from src.services.motive_service.interpolation import admissible_primes, class_from_counts, interpolate_class
from src.services.motive_service.motive_class import L, MotiveClass, affine_class, class_sum
from src.services.motive_service.rationality import detect_rationality, divides
from src.services.motive_service.series import MotiveRational, MotiveSeries, expand_rational, poly_product

__all__ = [
    "L",
    "MotiveClass",
    "MotiveRational",
    "MotiveSeries",
    "admissible_primes",
    "affine_class",
    "class_from_counts",
    "class_sum",
    "count_points",
    "detect_rationality",
    "divides",
    "expand_rational",
    "interpolate_class",
    "poly_product",
    "reduce_mod_p",
]
