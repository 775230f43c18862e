# tests/services/motive_service/test_interpolation.py
# coding: utf-8
"""
Тесты восстановления классов по числам точек.
"""
import itertools

import pytest

from src.model.errors import InterpolationError, PreconditionError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing
from src.services.arc_service.arcs import arc_space
from src.services.arc_service.fat_point import linear_fat_point
from src.services.arc_service.scheme import preset
from src.services.motive_service.counting import count_points
from src.services.motive_service.interpolation import admissible_primes, class_from_counts, interpolate_class
from src.services.motive_service.motive_class import L


def node_arcs(m):
    return arc_space(preset("node"), linear_fat_point(m)).ideal


# --- Тест 1: простые ---
def test_admissible_primes_skip_excluded():
    assert list(itertools.islice(admissible_primes({2, 3}), 4)) == [5, 7, 11, 13]
    assert list(itertools.islice(admissible_primes(start=10), 2)) == [11, 13]


def test_class_from_counts():
    assert class_from_counts({2: 8, 3: 21, 5: 65}) == 3 * L ** 2 - 2 * L


def test_non_integer_interpolant():
    with pytest.raises(InterpolationError):
        class_from_counts({2: 1, 3: 2, 5: 2})


# --- Тест 2: классы ---
def test_node_class():
    assert interpolate_class(preset("node").ideal, 1) == 2 * L - 1


def test_affine_three_space():
    ring = PolyRing(CoefficientField.rationals(), ("x", "y", "z"))
    assert interpolate_class(Ideal.zero(ring), 3) == L ** 3


def test_cusp_is_a_line():
    assert interpolate_class(preset("cusp").ideal, 1, excluded_chars={2, 3}) == L


@pytest.mark.parametrize("m", [2, 3])
def test_node_arc_class_formula(m):
    assert interpolate_class(node_arcs(m), m) == (m + 1) * L ** m - m * L ** (m - 1)


def test_cusp_arcs_of_length_two():
    arcs = arc_space(preset("cusp"), linear_fat_point(2)).ideal
    assert interpolate_class(arcs, 2, excluded_chars={2, 3}) == 2 * L ** 2 - L


def test_class_agrees_with_held_out_prime():
    cls = interpolate_class(node_arcs(2), 2)
    assert cls.evaluate_at_q(13) == count_points(node_arcs(2), 13)


# --- Тест 3: отказ ---
def test_degree_too_small_is_detected():
    with pytest.raises(InterpolationError) as info:
        interpolate_class(node_arcs(2), 1)
    assert info.value.details["verification_prime"] == 5


def test_prime_field_ideal_rejected():
    ring = PolyRing(CoefficientField.prime(5), ("x",))
    with pytest.raises(PreconditionError):
        interpolate_class(Ideal.zero(ring), 1)
