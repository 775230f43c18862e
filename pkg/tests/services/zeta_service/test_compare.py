# tests/services/zeta_service/test_compare.py
# coding: utf-8
"""
Тесты сверки рядов с замкнутыми формами.
"""
from src.services.motive_service.motive_class import L
from src.services.motive_service.series import MotiveRational, MotiveSeries
from src.services.zeta_service.compare import Verdict, compare, find_shift, render_table
from src.services.zeta_service.reference import printed_form, recomputed_theta

GEOMETRIC = MotiveRational((1,), (1, -1))


# --- Тест 1: вердикты ---
def test_exact_match():
    report = compare(MotiveSeries.from_classes([1, 1, 1]), GEOMETRIC)
    assert report.verdict is Verdict.MATCH
    assert report.mismatches == []


def test_mismatch_is_reported_per_coefficient():
    report = compare(MotiveSeries.from_classes([1, 1], T=3), GEOMETRIC)
    assert report.verdict is Verdict.MISMATCH
    assert report.mismatches == [2, 3]
    assert report.to_json()["coefficients"][2] == {
        "n": 2, "computed": "0", "closed": "1", "difference": "-1", "match": False,
    }
    assert report.notes


def test_tail_match_ignores_head():
    report = compare(MotiveSeries.from_classes([5, 1, 1, 1]), GEOMETRIC, tail_from=1)
    assert report.verdict is Verdict.TAIL_MATCH
    assert report.shift is None


# --- Тест 2: сдвиги ---
def test_shift_in_L():
    series = MotiveSeries.from_classes([L ** 2] * 4)
    assert find_shift(series, GEOMETRIC).to_json() == {"L_power": 2, "t_power": 0}
    assert compare(series, GEOMETRIC).verdict is Verdict.SHIFT_MATCH


def test_shift_in_t():
    squared = MotiveRational((1,), (1, -2, 1))
    series = MotiveSeries.from_classes([0, L, 2 * L, 3 * L])
    shift = find_shift(series, squared, tail_from=1)
    assert (shift.L_power, shift.t_power) == (1, 1)


def test_zero_series_has_no_shift():
    assert find_shift(MotiveSeries.from_classes([0, 0, 0]), GEOMETRIC) is None


# --- Тест 3: Θ каспа ---
def test_printed_cusp_theta_carries_extra_L():
    report = compare(recomputed_theta("cusp", 5), printed_form("theta_cusp"))
    assert report.verdict is Verdict.SHIFT_MATCH
    assert (report.shift.L_power, report.shift.t_power) == (-1, 0)


def test_printed_cusp_theta_diverges_at_sixth_coefficient():
    report = compare(recomputed_theta("cusp", 8), printed_form("theta_cusp"))
    assert report.verdict is Verdict.MISMATCH
    assert report.diffs[6].computed * L == L ** 2 + L - 1
    assert report.diffs[6].closed == 3 * L ** 2 + L - 1


def test_render_table():
    text = render_table(compare(MotiveSeries.from_classes([L ** 2] * 2), GEOMETRIC, name="demo"))
    lines = text.splitlines()
    assert lines[0] == "demo: shift-match"
    assert lines[-1] == "сдвиг: L^2 · t^0"
    assert len(lines) == 5
