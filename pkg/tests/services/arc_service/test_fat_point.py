# tests/services/arc_service/test_fat_point.py
# coding: utf-8
"""
Тесты толстых точек: длина, базис, локальность, умножение, произведения.
"""
from itertools import combinations_with_replacement
from math import comb

import pytest

from src.model.errors import InfiniteQuotientError, NonLocalFatPointError, RingMismatchError
from src.services.algebra_service.fields import CoefficientField
from src.services.arc_service.fat_point import (
    fat_point_from_strings,
    linear_fat_point,
    product_fat_point,
)


# --- Тест 1: построение ---
def test_linear_fat_point_of_length_two():
    l2 = linear_fat_point(2)
    assert l2.length == 2
    assert l2.basis_strings() == ["1", "t"]


def test_fat_point_with_two_variables():
    fat = fat_point_from_strings(["t", "u"], ["t^3", "u^2", "t*u"])
    assert fat.length == 4
    assert set(fat.basis_strings()) == {"1", "t", "u", "t^2"}
    # единица — первый базисный моном
    assert fat.basis_strings()[0] == "1"


def test_non_nilpotent_variable_rejected():
    with pytest.raises(NonLocalFatPointError) as info:
        fat_point_from_strings(["t"], ["t - 1"])
    assert info.value.details["variable"] == "t"


def test_unit_ideal_rejected():
    with pytest.raises(NonLocalFatPointError):
        fat_point_from_strings(["t"], ["1"])


def test_positive_dimensional_rejected():
    with pytest.raises(InfiniteQuotientError):
        fat_point_from_strings(["x", "y"], ["x^2"])


def test_linear_fat_point_needs_positive_length():
    with pytest.raises(InfiniteQuotientError):
        linear_fat_point(0)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_maximal_power_lengths(d, n):
    variables = [f"x{i}" for i in range(d)]
    gens = ["*".join(c) for c in combinations_with_replacement(variables, n)]
    fat = fat_point_from_strings(variables, gens)
    assert fat.length == comb(n - 1 + d, d)


# --- Тест 2: умножение ---
def test_multiplication_in_line_jet():
    l3 = linear_fat_point(3)
    ring = l3.ring.sympy_ring
    # (1 + t)(1 + t) = 1 + 2t + t^2
    u = [ring.one, ring.one, ring.zero]
    assert l3.multiply(u, u) == [ring.one, ring(2), ring.one]
    # t * t^2 = 0
    assert l3.multiply([ring.zero, ring.one, ring.zero], [ring.zero, ring.zero, ring.one]) == [ring.zero] * 3


def test_structure_constants_are_symmetric_products():
    fat = fat_point_from_strings(["x", "y"], ["x^2", "x*y", "y^2"])
    table = fat.structure_constants
    one = fat.index_of((0, 0))
    x = fat.index_of((1, 0))
    key = (min(one, x), max(one, x))
    assert [k for k, _ in table[key]] == [x]
    assert table[(x, x)] == []


# --- Тест 3: произведения ---
def test_product_of_linear_points():
    product = product_fat_point(linear_fat_point(2), linear_fat_point(2))
    assert product.length == 4
    assert product.ring.variables == ("t", "t_2")
    assert set(product.basis_strings()) == {"1", "t", "t_2", "t*t_2"}


def test_product_with_length_one_is_neutral():
    jet = fat_point_from_strings(["x", "y"], ["x^4", "x^3*y", "y^2 - x^3"])
    product = product_fat_point(linear_fat_point(1), jet)
    assert product.length == jet.length == 7


def test_product_length_multiplies():
    left = fat_point_from_strings(["t", "u"], ["t^3", "u^2", "t*u"])
    right = linear_fat_point(3)
    assert product_fat_point(left, right).length == 12


def test_product_over_different_fields():
    with pytest.raises(RingMismatchError):
        product_fat_point(linear_fat_point(2), linear_fat_point(2, CoefficientField.prime(5)))


def test_to_json():
    data = linear_fat_point(3).to_json()
    assert data["length"] == 3
    assert data["generators"] == ["t^3"]
    assert data["basis"] == ["1", "t", "t^2"]
