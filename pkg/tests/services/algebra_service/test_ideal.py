# tests/services/algebra_service/test_ideal.py
# coding: utf-8
"""
Тесты идеалов: конструкторы, степени, сравнение, размерность Крулля.
"""
from math import comb

import pytest

from src.model.errors import BudgetExceededError, PreconditionError, RingMismatchError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.groebner import standard_monomials
from src.services.algebra_service.ideal import Ideal, dimension, ideal_power
from src.services.algebra_service.polynomial import PolyRing


@pytest.fixture
def qxy():
    return PolyRing(CoefficientField.rationals(), ("x", "y"))


def ring_of_dim(d):
    return PolyRing(CoefficientField.rationals(), tuple(f"x{i}" for i in range(d)))


# --- Тест 1: конструкторы ---
def test_zero_generators_are_dropped(qxy):
    ideal = Ideal.from_strings(qxy, ["0", "x", "0"])
    assert ideal.generator_strings() == ["x"]


def test_generator_from_foreign_ring(qxy):
    other = PolyRing(CoefficientField.rationals(), ("u",))
    with pytest.raises(RingMismatchError):
        Ideal(qxy, (other.gen("u"),))


def test_to_json(qxy):
    ideal = Ideal.from_strings(qxy, ["y^2 - x^3"])
    assert ideal.to_json() == {"field": "QQ", "variables": ["x", "y"], "generators": ["-x^3 + y^2"]}


def test_occurring_variables(qxy):
    assert Ideal.from_strings(qxy, ["y^2"]).occurring_variables() == ["y"]


# --- Тест 2: операции ---
def test_sum_and_equality(qxy):
    left = Ideal.from_strings(qxy, ["y^2 - x^3"]) + Ideal.from_strings(qxy, ["x"])
    right = Ideal.from_strings(qxy, ["x", "y^2"])
    assert left.equals(right)
    assert not left.equals(Ideal.from_strings(qxy, ["x", "y"]))


def test_membership(qxy):
    ideal = Ideal.from_strings(qxy, ["x^2", "y"])
    assert ideal.contains(qxy.parse("x^3 + x*y"))
    assert not ideal.contains(qxy.parse("x"))
    assert Ideal.from_strings(qxy, ["x - 1", "x"]).is_unit()


def test_scaled_generators_compare_without_basis(qxy):
    left = Ideal.from_strings(qxy, ["2*x^2 - 4*y", "3*y^3"])
    right = Ideal.from_strings(qxy, ["y^3", "x^2 - 2*y"])
    assert left.equals(right)
    assert left.contains(qxy.parse("-x^2 + 2*y"))
    assert "groebner" not in left._cache
    assert not left.contains(qxy.parse("y"))
    assert "groebner" in left._cache


def test_ideal_power_of_maximal(qxy):
    square = ideal_power(Ideal.maximal_at_origin(qxy), 2)
    assert set(square.generator_strings()) == {"x^2", "x*y", "y^2"}


def test_ideal_power_first_is_same(qxy):
    ideal = Ideal.from_strings(qxy, ["x", "y^2"])
    assert ideal_power(ideal, 1).equals(ideal)


def test_ideal_power_rejects_zero_exponent(qxy):
    with pytest.raises(PreconditionError):
        ideal_power(Ideal.maximal_at_origin(qxy), 0)


# --- Тест 3: размерность ---
@pytest.mark.parametrize(
    "gens, expected",
    [
        (["x^2"], 1),
        ([], 2),
        (["x", "y"], 0),
        (["x", "x - 1"], -1),
        (["y^2 - x^3"], 1),
        (["x*y"], 1),
    ],
)
def test_dimension(qxy, gens, expected):
    assert dimension(Ideal.from_strings(qxy, gens)) == expected


def test_dimension_subset_cap(qxy):
    with pytest.raises(BudgetExceededError):
        dimension(Ideal.from_strings(qxy, ["x^2"]), subset_cap=1)


# --- Тест 4: длины факторов ---
@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_length_of_maximal_power(d, n):
    ring = ring_of_dim(d)
    ideal = ideal_power(Ideal.maximal_at_origin(ring), n)
    assert len(standard_monomials(ideal.groebner())) == comb(n - 1 + d, d)


@pytest.mark.parametrize("n", range(2, 9))
def test_cusp_plus_maximal_power_has_length_2n_minus_1(qxy, n):
    ideal = ideal_power(Ideal.maximal_at_origin(qxy), n) + Ideal.from_strings(qxy, ["y^2 - x^3"])
    assert dimension(ideal) == 0
    assert len(standard_monomials(ideal.groebner())) == 2 * n - 1
