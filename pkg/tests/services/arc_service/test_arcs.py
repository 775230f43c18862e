# tests/services/arc_service/test_arcs.py
# coding: utf-8
"""
Тесты струй, пространств дуг и автодуг.
"""
import itertools
from math import comb

import pytest

from src.model.errors import PointNotOnSchemeError, PreconditionError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing, evaluate, substitute
from src.services.algebra_service.renaming import equal_up_to_renaming
from src.services.arc_service.arcs import arc_space, auto_arc, flat_basis_order, jet
from src.services.arc_service.fat_point import linear_fat_point, product_fat_point
from src.services.arc_service.scheme import AffineScheme, preset

NODE_2_TABLE = [
    "a8^2", "a8*a9", "a9^2",
    "2*a4*a8", "2*a6*a8", "2*a5*a9", "2*a7*a9",
    "a5*a8 + a4*a9", "a7*a8 + a6*a9",
]


# --- Тест 1: струи ---
def test_jet_of_line_is_linear_fat_point():
    fat = jet(preset("A1"), [0], 4)
    assert fat.length == 4
    assert fat.groebner.to_strings() == ["x^4"]


def test_cusp_jet_length():
    assert jet(preset("cusp"), None, 4).length == 7


def test_node_jet_at_smooth_point():
    fat = jet(preset("node"), [1, 0], 2)
    assert fat.length == 2
    assert set(fat.groebner.to_strings()) == {"x^2", "y"}


def test_jet_point_must_lie_on_scheme():
    with pytest.raises(PointNotOnSchemeError):
        jet(preset("node"), [1, 1], 2)


def test_jet_order_zero_rejected():
    with pytest.raises(PreconditionError):
        jet(preset("node"), None, 0)


@pytest.mark.parametrize("d, name", [(1, "A1"), (2, "A2"), (3, "A3")])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_jet_length_of_affine_space(d, name, n):
    assert jet(preset(name), None, n).length == comb(n - 1 + d, d)


# --- Тест 2: пространства дуг ---
def test_arc_space_of_node_over_l2():
    arc = arc_space(preset("node"), linear_fat_point(2))
    assert arc.variables == ("a_0_0", "a_0_1", "a_1_0", "a_1_1")
    expected = Ideal.from_strings(arc.ring, ["a_0_0*a_1_0", "a_0_0*a_1_1 + a_0_1*a_1_0"])
    assert len(arc.generators) == 2
    assert arc.ideal.equals(expected)


def test_arc_space_of_line_has_no_equations():
    arc = arc_space(preset("A1"), linear_fat_point(5))
    assert arc.generators == ()
    assert len(arc.variables) == 5


def test_arc_space_of_cusp_over_l2():
    arc = arc_space(preset("cusp"), linear_fat_point(2))
    ring = PolyRing(CoefficientField.rationals(), ("a0", "a1", "b0", "b1"))
    hand = Ideal.from_strings(ring, ["b0^2 - a0^3", "2*b0*b1 - 3*a0^2*a1"])
    assert len(arc.generators) == 2
    assert equal_up_to_renaming(arc.ideal, hand) is not None


@pytest.mark.parametrize("name", ["node", "cusp", "A2"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_grid_size(name, m):
    arc = arc_space(preset(name), linear_fat_point(m))
    assert len(arc.variables) == 2 * m
    assert len(arc.raw_generators) <= len(arc.source.ideal.generators) * m


@pytest.mark.parametrize("name", ["node", "cusp"])
def test_length_one_fat_point_is_identity(name):
    scheme = preset(name)
    arc = arc_space(scheme, linear_fat_point(1))
    assert equal_up_to_renaming(arc.ideal, scheme.ideal) is not None


@pytest.mark.parametrize("name", ["node", "cusp"])
def test_functoriality_over_product(name):
    scheme = preset(name)
    l2 = linear_fat_point(2)
    direct = arc_space(scheme, product_fat_point(l2, l2))
    iterated = arc_space(arc_space(scheme, l2).as_scheme(), l2)
    assert len(direct.variables) == len(iterated.variables) == 8
    assert equal_up_to_renaming(direct.ideal, iterated.ideal) is not None


@pytest.mark.parametrize("p", [2, 3])
def test_point_functor_consistency_over_small_fields(p):
    field = CoefficientField.prime(p)
    node = preset("node", field)
    arc = arc_space(node, linear_fat_point(2, field))
    # точки пространства дуг над F_p
    count = sum(
        1 for point in itertools.product(range(p), repeat=4)
        if all(not evaluate(g, point) for g in arc.generators)
    )
    # точки узла со значениями в F_p[t]/(t^2): прямая проверка x*y = 0 mod t^2
    direct = 0
    for a0, a1, b0, b1 in itertools.product(range(p), repeat=4):
        if (a0 * b0) % p == 0 and (a0 * b1 + a1 * b0) % p == 0:
            direct += 1
    assert count == direct == 3 * p * p - 2 * p


# --- Тест 3: автодуги ---
def test_auto_arc_of_point_is_trivial():
    arc = auto_arc(preset("point"), None, 3)
    assert arc.variables == ()
    assert arc.generators == ()
    assert arc.fat.length == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_auto_arc_of_line_is_nilpotent_in_constant_term(n):
    arc = auto_arc(preset("A1"), [0], n)
    assert len(arc.variables) == n
    ring = arc.ring
    assert arc.ideal.contains(ring.gen("a_0_0") ** n)
    # каждое уравнение обращается в ноль при a_0_0 = 0
    images = dict(ring.gens())
    images["a_0_0"] = ring.zero
    assert all(not substitute(g, images) for g in arc.generators)


def test_auto_arc_grid_matches_jet():
    arc = auto_arc(preset("cusp"), None, 4)
    assert arc.fat.length == 7
    assert len(arc.variables) == 2 * 7
    assert arc.provenance["order"] == 4
    assert arc.provenance["construction"] == "auto_arc"


def test_node_auto_arc_matches_printed_table():
    arc = auto_arc(preset("node"), None, 2)
    assert arc.provenance["flat_basis_order"] == ["y", "x", "1"]
    assert arc.flat_index["a_0_0"] == 8
    assert arc.flat_index["a_1_0"] == 9
    assert arc.ideal.equals(arc.flat_ideal(NODE_2_TABLE))


def test_flat_basis_order_puts_last_variable_first():
    arc = auto_arc(preset("cusp+"), None, 3)
    order = [arc.fat.basis_strings()[j] for j in flat_basis_order(arc.fat)]
    assert order == ["x*y", "y", "x^2", "x", "1"]
    assert arc.provenance["bookkeeping_variables"] == ["a0", "a1", "a2", "a3"]


def test_to_json_shape():
    data = arc_space(preset("node"), linear_fat_point(2)).to_json()
    assert data["grid"] == [["a_0_0", "a_0_1"], ["a_1_0", "a_1_1"]]
    assert set(data) >= {"source", "fat", "grid", "generators", "provenance"}


def test_scheme_over_prime_field():
    field = CoefficientField.prime(5)
    scheme = AffineScheme.from_strings(["x", "y"], ["x*y"], field)
    arc = arc_space(scheme, linear_fat_point(2, field))
    assert arc.ring.field == field
