# tests/services/motive_service/test_motive_class.py
# coding: utf-8
"""
Тесты арифметики классов в Z[L, L^-1].
"""
from fractions import Fraction

import pytest

from src.model.errors import NonUnitConstantError, ParseError
from src.services.motive_service.motive_class import L, MotiveClass, affine_class, class_sum


def cls(text):
    return MotiveClass.from_text(text)


# --- Тест 1: кольцевые операции ---
def test_lefschetz_inverse():
    assert L * MotiveClass.lefschetz(-1) == MotiveClass.one()
    assert L * L ** -1 == 1


def test_square_expansion():
    assert (3 * L ** 2 - 2 * L) ** 2 == cls("9*L^4 - 12*L^3 + 4*L^2")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_node_class_formula_square(n):
    c = (n + 2) * L ** (n + 1) - (n + 1) * L ** n
    assert c * c == (n + 2) ** 2 * L ** (2 * n + 2) - 2 * (n + 2) * (n + 1) * L ** (2 * n + 1) + (n + 1) ** 2 * L ** (2 * n)


def test_integer_operands():
    assert 1 - L == -(L - 1)
    assert (L + 1) - 1 == L
    assert class_sum([L, L, 1]) == 2 * L + 1
    assert affine_class(3) == L ** 3


# --- Тест 2: размерность и специализация ---
@pytest.mark.parametrize("text, expected", [("L^3 - L", 3), ("3*L^2 - 2*L", 2), ("L^-2 + 5*L^-4", -2)])
def test_dim(text, expected):
    assert cls(text).dim() == expected


def test_dim_of_zero_is_minus_infinity():
    assert MotiveClass.zero().dim() == float("-inf")


def test_dim_is_additive_under_products():
    a, b = cls("3*L^2 - 2*L"), cls("L^-1 - 7")
    assert (a * b).dim() == a.dim() + b.dim()


def test_evaluate_at_q():
    assert cls("3*L^2 - 2*L").evaluate_at_q(3) == 21
    assert MotiveClass.lefschetz(-1).evaluate_at_q(2) == Fraction(1, 2)
    assert MotiveClass.one().evaluate_at_q(7) == 1


# --- Тест 3: обратимость ---
def test_units():
    assert (-(L ** 2)).inverse() == -MotiveClass.lefschetz(-2)
    with pytest.raises(NonUnitConstantError):
        (2 * L).inverse()
    with pytest.raises(NonUnitConstantError):
        (L - 1).inverse()


# --- Тест 4: запись ---
def test_text_round_trip():
    c = cls("3*L^2 - 2*L + L^-1")
    assert c.coefficients == {-1: 1, 1: -2, 2: 3}
    assert str(c) == "3*L^2 - 2*L + L^-1"
    assert str(1 - L) == "-L + 1"
    assert str(MotiveClass.zero()) == "0"


def test_json_shape():
    c = cls("2 + L^-1")
    assert c.to_json() == {"L_coeffs": {"-1": 1, "0": 2}}
    assert MotiveClass.from_json(c.to_json()) == c


@pytest.mark.parametrize("text", ["x + L", "L/2", "L^(1/2)", "("])
def test_bad_text(text):
    with pytest.raises(ParseError):
        cls(text)


def test_hash_matches_equality():
    assert len({cls("L + 1"), L + 1, 1 + L}) == 1
