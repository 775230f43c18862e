# tests/services/motive_service/test_series.py
# coding: utf-8
"""
Тесты усечённых рядов и рациональных функций.
"""
import pytest

from src.model.errors import NonUnitConstantError, TruncationError
from src.services.motive_service.motive_class import L, MotiveClass
from src.services.motive_service.series import MotiveRational, MotiveSeries, expand_rational, poly_product


def series(*coeffs):
    return MotiveSeries.from_classes(coeffs)


THETA_CUSP = MotiveRational.from_factors(
    [L, L - 1, 0, 0, 0, L ** 2 - L, L ** 2],
    [[1, 0, 0, 0, 0, 0, -L], [1, -1]],
)


# --- Тест 1: фильтры и подстановки ---
def test_star_filter_even_terms():
    assert series(1, 1, 1, 1).star_filter(2, 0) == series(1, 0, 1, 0)


def test_star_filter_parts_sum_to_series():
    s = series(L, 2, L ** 2, -1, 5)
    assert s.star_filter(2, 0) + s.star_filter(2, 1) == s
    assert s.star_filter(1, 0) == s


def test_substitute_t_power():
    result = series(1, 1).substitute_t_power(2)
    assert result.T == 2
    assert result == series(1, 0, 1)


def test_evaluate_at_L_inverse():
    s = MotiveSeries.geometric(1, 3, scale=L ** -1)
    expected = L ** -1 * (1 + L ** -1 + L ** -2 + L ** -3)
    assert s.evaluate_at_L_inverse() == expected


def test_shifted():
    assert series(1, 2, 3).shifted(L_power=1, t_power=1) == series(0, L, 2 * L)


# --- Тест 2: арифметика ---
def test_product_truncates_to_min():
    product = series(1, 1, 1, 1) * series(1, -1)
    assert product.T == 1
    assert product == series(1, 0)


def test_sum_truncates_to_min():
    total = series(1, 2, 3) + series(L, L)
    assert total.T == 1
    assert total == series(1 + L, 2 + L)
    assert (series(L, L) - series(1, 2, 3)).T == 1


def test_scalar_product_keeps_order():
    assert (L * series(1, 2, 3)).T == 2


def test_multiplication_commutes_and_associates():
    a = series(1, L, L ** 2 - 1, 3)
    b = series(L ** -1, 0, 2, -L)
    c = series(2, L - 1, 0, 1)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


def test_scale_by_class():
    assert series(1, 2) * L == series(L, 2 * L)
    assert L * series(1, 2) == series(L, 2 * L)


def test_coefficient_beyond_truncation():
    with pytest.raises(TruncationError):
        series(1, 2).coefficient(2)
    with pytest.raises(TruncationError):
        series(1, 2).truncate(3)


def test_padding_to_truncation():
    s = MotiveSeries(3, (MotiveClass.one(),))
    assert s.to_strings() == ["1", "0", "0", "0"]


# --- Тест 3: разложение рациональных функций ---
def test_expand_geometric():
    assert expand_rational(MotiveRational((1,), (1, -1)), 3) == series(1, 1, 1, 1)


def test_expand_with_laurent_numerator():
    R = MotiveRational((L ** -1,), (1, -1))
    assert R.expand(2) == series(L ** -1, L ** -1, L ** -1)


def test_expand_theta_cusp_closed_form():
    s = THETA_CUSP.expand(6)
    assert s.coefficient(0) == L
    assert s.coefficient(1) == 2 * L - 1


def test_expansion_solves_denominator_identity():
    T = 10
    s = THETA_CUSP.expand(T)
    product = s * MotiveSeries.from_classes(THETA_CUSP.den, T)
    assert product == MotiveSeries.from_classes(THETA_CUSP.num, T)


def test_unit_constant_with_L_power():
    R = MotiveRational((1,), (-(L ** 2), 1))
    s = R.expand(2)
    assert s.coefficient(0) == -(L ** -2)
    assert s.coefficient(1) == -(L ** -4)


def test_non_unit_constant_rejected():
    with pytest.raises(NonUnitConstantError):
        MotiveRational((1,), (2, -1))
    with pytest.raises(NonUnitConstantError):
        MotiveRational((1,), (L - 1,))


def test_poly_product_of_cubed_factor():
    assert poly_product([[1, -(L ** 2)]] * 3) == (1, -3 * L ** 2, 3 * L ** 4, -(L ** 6))


def test_json_shapes():
    data = THETA_CUSP.to_json()
    assert set(data) == {"num", "den"}
    assert MotiveRational.from_json(data) == THETA_CUSP
    s = series(1, L)
    assert s.to_json() == {"T": 1, "coeffs": [{"L_coeffs": {"0": 1}}, {"L_coeffs": {"1": 1}}]}
    assert MotiveSeries.from_json(s.to_json()) == s
