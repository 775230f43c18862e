# tests/services/arc_service/test_scheme.py
# coding: utf-8
"""
Тесты аффинных схем: предустановки, точки, сдвиг, произведения.
"""
import pytest

from src.model.errors import ParseError, PointNotOnSchemeError, PreconditionError
from src.services.arc_service.scheme import AffineScheme, preset, preset_names, product_scheme


# --- Тест 1: предустановки ---
@pytest.mark.parametrize(
    "name, generators, bad",
    [
        ("cusp", ["-x^3 + y^2"], (2, 3)),
        ("cusp+", ["x^3 + y^2"], (2, 3)),
        ("node", ["x*y"], ()),
        ("nodal-cubic", ["-x^3 - x^2 + y^2"], (2,)),
        ("A2", [], ()),
    ],
)
def test_fixed_presets(name, generators, bad):
    scheme = preset(name)
    assert scheme.ideal.generator_strings() == generators
    assert scheme.bad_characteristics == bad


def test_family_presets():
    cusp = preset("cusp(2,3)")
    assert cusp.ideal.generator_strings() == ["y^3 - x^2"]
    assert cusp.bad_characteristics == (2, 3)
    node = preset("node(2,1)")
    assert node.ideal.generator_strings() == ["x^2*y"]


def test_point_preset_has_no_variables():
    point = preset("point")
    assert point.variables == ()
    assert point.dimension() == 0


def test_unknown_preset():
    with pytest.raises(ParseError):
        preset("tacnode")
    assert "cusp(m,l)" in preset_names()


def test_empty_scheme_rejected():
    with pytest.raises(PreconditionError):
        AffineScheme.from_strings(["x"], ["x", "x - 1"])


# --- Тест 2: точки и сдвиг ---
def test_contains_point():
    node = preset("node")
    assert node.contains_point([1, 0])
    assert not node.contains_point([1, 1])


def test_point_arity_checked():
    with pytest.raises(ParseError):
        preset("node").normalize_point([0])


def test_translate_node_to_smooth_point():
    moved = preset("node").translate([1, 0])
    assert moved.ideal.generator_strings() == ["x*y + y"]


def test_translate_rejects_point_off_scheme():
    with pytest.raises(PointNotOnSchemeError):
        preset("cusp").translate([1, 2])


def test_dimension_is_cached():
    cusp = preset("cusp")
    assert cusp.dimension() == 1
    assert cusp._cache["dimension"] == 1


# --- Тест 3: произведения ---
def test_product_of_nodes():
    square = product_scheme(preset("node"), preset("node"))
    assert square.variables == ("x", "y", "x_2", "y_2")
    assert square.ideal.generator_strings() == ["x*y", "x_2*y_2"]
    assert square.dimension() == 2


def test_product_merges_bad_characteristics():
    product = product_scheme(preset("cusp"), preset("nodal-cubic"))
    assert product.bad_characteristics == (2, 3)
