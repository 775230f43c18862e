# src/services/algebra_service/__init__.py
"""
Точная алгебра: поля коэффициентов, кольца многочленов, разбор выражений,
идеалы и базисы Грёбнера, сравнение идеалов с точностью до переименования.
"""
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.groebner import (
    GroebnerBasis,
    StepBudget,
    groebner,
    interreduce,
    normal_form,
    standard_monomials,
)
from src.services.algebra_service.ideal import Ideal, dimension, ideal_power
from src.services.algebra_service.parser import parse
from src.services.algebra_service.polynomial import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    add,
    mul,
    power,
    ring_of,
    substitute,
    sub,
    to_string,
)
from src.services.algebra_service.renaming import equal_up_to_renaming, equal_up_to_signed_renaming

__all__ = [
    "CoefficientField",
    "GroebnerBasis",
    "Ideal",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "StepBudget",
    "add",
    "dimension",
    "equal_up_to_renaming",
    "equal_up_to_signed_renaming",
    "groebner",
    "ideal_power",
    "interreduce",
    "mul",
    "normal_form",
    "parse",
    "power",
    "ring_of",
    "standard_monomials",
    "sub",
    "substitute",
    "to_string",
]
