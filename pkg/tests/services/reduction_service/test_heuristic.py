# tests/services/reduction_service/test_heuristic.py
# coding: utf-8
"""
Тесты эвристической редукции: правила, флаги, свободные переменные,
структура редуцированных пространств автодуг.
"""
from math import comb

import pytest

from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing
from src.services.arc_service.arcs import auto_arc
from src.services.arc_service.scheme import preset
from src.services.reduction_service.decompose import is_affine_space
from src.services.reduction_service.heuristic import ReductionFlag, heuristic_reduce


def ideal(variables, gens):
    return Ideal.from_strings(PolyRing(CoefficientField.rationals(), tuple(variables)), gens)


# --- Тест 1: отдельные правила ---
def test_pure_power_kills_variable():
    reduced = heuristic_reduce(ideal(["a"], ["a^3"]))
    assert reduced.killed == ("a",)
    assert reduced.residual == ()
    assert reduced.free == ()
    assert reduced.flag is ReductionFlag.RADICAL_CERTIFIED


def test_monomial_becomes_squarefree():
    reduced = heuristic_reduce(ideal(["a", "b", "c"], ["3*a^2*b"]))
    assert reduced.residual_strings() == ["a*b"]
    assert reduced.free == ("c",)
    assert reduced.certified
    assert reduced.rules_fired["squarefree"] == 1


def test_linear_substitution():
    reduced = heuristic_reduce(ideal(["a", "b", "c"], ["a - b^2", "a*c"]))
    assert {v: str(p) for v, p in reduced.to_json()["substitutions"].items()} == {"a": "b^2"}
    assert reduced.residual_strings() == ["b*c"]
    assert reduced.free == ()
    assert reduced.certified


def test_non_monomial_residual_is_heuristic():
    reduced = heuristic_reduce(ideal(["x", "y"], ["y^2 - x^3"]))
    assert reduced.flag is ReductionFlag.HEURISTIC_FIXPOINT
    assert reduced.residual_strings() == ["x^3 - y^2"]
    assert reduced.free == ()


def test_zero_ideal_is_free():
    reduced = heuristic_reduce(ideal(["a", "b"], []))
    assert reduced.free == ("a", "b")
    assert is_affine_space(reduced) == 2


# --- Тест 2: подтверждение убийств ---
def test_kill_certificate():
    reduced = heuristic_reduce(ideal(["a", "b"], ["a^3", "a*b"]), certify=True)
    assert reduced.kill_certificates == {"a": 3}
    assert reduced.certified


def test_certification_is_default():
    reduced = heuristic_reduce(ideal(["a", "b"], ["a^3", "a*b"]))
    assert reduced.kill_certificates == {"a": 3}
    assert reduced.kills_certified
    assert reduced.to_json()["kills_certified"] is True


def test_certification_can_be_disabled():
    reduced = heuristic_reduce(ideal(["a", "b"], ["a^3", "a*b"]), certify=False)
    assert reduced.kill_certificates == {}
    assert not reduced.kills_certified
    assert reduced.certified


def test_kill_certificate_chains_through_earlier_kills():
    reduced = heuristic_reduce(ideal(["a", "b"], ["a^2", "b^2 + a"]))
    assert set(reduced.killed) == {"a", "b"}
    assert reduced.kill_certificates == {"a": 2, "b": 2}
    assert reduced.kills_certified


def test_kill_certificate_cap_downgrades_flag():
    reduced = heuristic_reduce(ideal(["a"], ["a^3"]), certify=True, certify_cap=2)
    assert reduced.kill_certificates == {"a": None}
    assert not reduced.kills_certified
    assert reduced.flag is ReductionFlag.HEURISTIC_FIXPOINT


def test_fourth_cusp_auto_arc_kills_are_certified():
    reduced = heuristic_reduce(auto_arc(preset("cusp"), None, 4))
    assert len(reduced.killed) == 3
    assert set(reduced.kill_certificates) == set(reduced.killed)
    assert all(isinstance(e, int) and e >= 1 for e in reduced.kill_certificates.values())
    assert reduced.kills_certified


# --- Тест 3: пространства автодуг ---
@pytest.mark.parametrize("name", ["node", "cusp", "cusp+"])
def test_second_auto_arc_is_affine_four_space(name):
    reduced = heuristic_reduce(auto_arc(preset(name), None, 2))
    assert len(reduced.killed) == 2
    assert is_affine_space(reduced) == 4
    assert reduced.certified


@pytest.mark.parametrize("name", ["cusp", "cusp+"])
def test_third_cusp_auto_arc_is_affine_seven_space(name):
    reduced = heuristic_reduce(auto_arc(preset(name), None, 3))
    assert len(reduced.killed) == 3
    assert is_affine_space(reduced) == 7


@pytest.mark.parametrize("d, name", [(1, "A1"), (2, "A2")])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_affine_rank_of_smooth_auto_arcs(d, name, n):
    reduced = heuristic_reduce(auto_arc(preset(name), None, n))
    assert is_affine_space(reduced) == d * (comb(n - 1 + d, d) - 1)


def test_line_auto_arc_of_order_five():
    assert is_affine_space(heuristic_reduce(auto_arc(preset("A1"), None, 5))) == 4


def test_fourth_cusp_auto_arc_is_not_affine():
    reduced = heuristic_reduce(auto_arc(preset("cusp"), None, 4))
    assert is_affine_space(reduced) is None
    assert len(reduced.free) == 7


# --- Тест 4: неподвижная точка ---
@pytest.mark.parametrize("name, n", [("node", 3), ("cusp", 4), ("node", 4)])
def test_fixpoint_idempotence(name, n):
    reduced = heuristic_reduce(auto_arc(preset(name), None, n))
    again = heuristic_reduce(reduced.residual_ideal)
    assert again.killed == ()
    assert again.substitutions == {}
    assert again.residual_strings() == reduced.residual_strings()


def test_to_json_shape():
    data = heuristic_reduce(ideal(["a", "b"], ["a^2"])).to_json()
    assert data["killed"] == ["a"]
    assert data["free"] == ["b"]
    assert data["certified"] is True
    assert data["flag"] == "radical-certified"
