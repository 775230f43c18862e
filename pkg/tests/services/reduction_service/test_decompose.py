# tests/services/reduction_service/test_decompose.py
# coding: utf-8
"""
Тесты разложения редуцированных автодуг на аффинную часть и факторы.
"""
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing
from src.services.algebra_service.renaming import equal_up_to_renaming
from src.services.arc_service.arcs import arc_space, auto_arc
from src.services.arc_service.fat_point import linear_fat_point
from src.services.arc_service.scheme import preset
from src.services.reduction_service.decompose import decompose
from src.services.reduction_service.heuristic import heuristic_reduce


# --- Тест 1: компоненты связности ---
def test_disjoint_supports_split():
    ring = PolyRing(CoefficientField.rationals(), ("a", "b", "c", "d", "e"))
    reduced = heuristic_reduce(Ideal.from_strings(ring, ["a*c", "b*d"]))
    decomposition = decompose(reduced)
    assert decomposition.affine_rank == 1
    assert decomposition.supports == [["a", "c"], ["b", "d"]]


def test_unit_residual_gives_empty_factor():
    ring = PolyRing(CoefficientField.rationals(), ("a", "b"))
    reduced = heuristic_reduce(Ideal.from_strings(ring, ["a", "a - 1"]))
    decomposition = decompose(reduced)
    assert len(decomposition.factors) == 1
    assert decomposition.factors[0].is_unit()


# --- Тест 2: автодуги узла ---
def test_third_node_auto_arc_has_two_factors():
    decomposition = decompose(heuristic_reduce(auto_arc(preset("node"), None, 3)))
    assert decomposition.affine_rank == 4
    assert len(decomposition.factors) == 2
    assert all(len(f.generators) == 1 for f in decomposition.factors)


def test_fourth_node_auto_arc_factors_are_node_arcs():
    decomposition = decompose(heuristic_reduce(auto_arc(preset("node"), None, 4)))
    assert decomposition.affine_rank == 4
    assert len(decomposition.factors) == 2
    node_arcs = arc_space(preset("node"), linear_fat_point(2)).ideal
    for factor in decomposition.factors:
        assert equal_up_to_renaming(factor, node_arcs) is not None


# --- Тест 3: автодуги каспа ---
def test_fourth_cusp_auto_arc_factor_is_cusp_arc():
    decomposition = decompose(heuristic_reduce(auto_arc(preset("cusp"), None, 4)))
    assert decomposition.affine_rank == 7
    assert len(decomposition.factors) == 1
    cusp_arcs = arc_space(preset("cusp"), linear_fat_point(2)).ideal
    assert equal_up_to_renaming(decomposition.factors[0], cusp_arcs) is not None


def test_to_json_shape():
    data = decompose(heuristic_reduce(auto_arc(preset("node"), None, 3))).to_json()
    assert data["affine_rank"] == 4
    assert len(data["factors"]) == len(data["factor_variables"]) == 2
