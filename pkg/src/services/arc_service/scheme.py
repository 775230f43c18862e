# src/services/arc_service/scheme.py
# coding: utf-8
"""
Аффинные схемы X = Spec k[x]/I, предустановленные кривые и произведения схем.

Предустановки:
  A1, A2, A3      — аффинные пространства;
  cusp            — y^2 - x^3 (плохие характеристики 2, 3);
  cusp+           — y^2 + x^3 (знак таблиц уравнений);
  node            — x*y;
  nodal-cubic     — y^2 - x^3 - x^2 (плохая характеристика 2);
  cusp(m,l)       — y^l - x^m (плохие — простые делители m·l);
  node(m,l)       — x^m * y^l;
  point           — Spec k (ноль переменных).
"""

from __future__ import annotations
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import primefactors

from src.model.errors import ParseError, PointNotOnSchemeError, PreconditionError, RingMismatchError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal, dimension
from src.services.algebra_service.polynomial import PolyRing, evaluate, rename_into, substitute
from src.services.arc_service.fat_point import fresh_names

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

Point = Tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class AffineScheme:
    ideal: Ideal
    name: str = ""
    bad_characteristics: Tuple[int, ...] = ()
    _cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_strings(
        cls,
        variables: Sequence[str],
        generators: Sequence[str],
        field: Optional[CoefficientField] = None,
        name: str = "",
        bad_characteristics: Iterable[int] = (),
    ) -> "AffineScheme":
        ring = PolyRing(field or CoefficientField.rationals(), tuple(variables))
        scheme = cls(Ideal.from_strings(ring, generators), name, tuple(sorted(set(bad_characteristics))))
        scheme.ensure_proper()
        return scheme

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ring.variables

    def ensure_proper(self, budget: Any = None) -> None:
        if self.ideal.is_unit(budget):
            raise PreconditionError("Идеал схемы единичный: схема пуста", details={"scheme": self.name})

    def dimension(self, budget: Any = None) -> int:
        dim = self._cache.get("dimension")
        if dim is None:
            dim = dimension(self.ideal, budget)
            self._cache["dimension"] = dim
        return dim

    def normalize_point(self, point: Optional[Sequence[Any]]) -> Point:
        """Начало координат, если point не задан; длина проверяется."""
        if point is None:
            return tuple(Fraction(0) for _ in self.variables)
        if len(point) != len(self.variables):
            raise ParseError(
                f"Точка имеет {len(point)} координат, а переменных {len(self.variables)}",
                details={"point": [str(c) for c in point], "variables": list(self.variables)},
            )
        return tuple(Fraction(c) for c in point)

    def contains_point(self, point: Sequence[Any]) -> bool:
        coords = self.normalize_point(point)
        return all(not evaluate(g, coords) for g in self.ideal.generators)

    def translate(self, point: Optional[Sequence[Any]]) -> "AffineScheme":
        """Схема, сдвинутая так, что point переходит в начало координат."""
        coords = self.normalize_point(point)
        if not self.contains_point(coords):
            raise PointNotOnSchemeError(
                f"Точка {[str(c) for c in coords]} не лежит на схеме {self.name or ''}".rstrip(),
                details={"point": [str(c) for c in coords], "generators": self.ideal.generator_strings()},
            )
        if not any(coords):
            return self
        gens = self.ring.gens()
        images = {v: gens[v] + self.ring.constant(c) for v, c in zip(self.variables, coords)}
        moved = tuple(substitute(g, images) for g in self.ideal.generators)
        return AffineScheme(Ideal(self.ring, moved), self.name, self.bad_characteristics)

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            **self.ideal.to_json(),
            "bad_characteristics": list(self.bad_characteristics),
        }

    def __repr__(self) -> str:
        return f"AffineScheme({self.name or self.ideal.generator_strings()!r})"


# -------------------------
# Предустановки
# -------------------------

_FIXED_PRESETS: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...], Tuple[int, ...]]] = {
    "A1": (("x",), (), ()),
    "A2": (("x", "y"), (), ()),
    "A3": (("x", "y", "z"), (), ()),
    "cusp": (("x", "y"), ("y^2 - x^3",), (2, 3)),
    "cusp+": (("x", "y"), ("y^2 + x^3",), (2, 3)),
    "node": (("x", "y"), ("x*y",), ()),
    "nodal-cubic": (("x", "y"), ("y^2 - x^3 - x^2",), (2,)),
    "point": ((), (), ()),
}

_FAMILY_RE = re.compile(r"^\s*(cusp|node)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def preset_names() -> List[str]:
    return sorted(_FIXED_PRESETS) + ["cusp(m,l)", "node(m,l)"]


def preset(name: str, field: Optional[CoefficientField] = None) -> AffineScheme:
    """Предустановленная схема по имени."""
    if name in _FIXED_PRESETS:
        variables, generators, bad = _FIXED_PRESETS[name]
        return AffineScheme.from_strings(variables, generators, field, name=name, bad_characteristics=bad)
    m = _FAMILY_RE.match(name or "")
    if not m:
        raise ParseError(f"Неизвестная предустановка: {name!r}", details={"preset": name, "known": preset_names()})
    family, a, b = m.group(1), int(m.group(2)), int(m.group(3))
    if a < 1 or b < 1:
        raise ParseError("Показатели семейства должны быть >= 1", details={"preset": name})
    if family == "cusp":
        return AffineScheme.from_strings(
            ("x", "y"), (f"y^{b} - x^{a}",), field, name=f"cusp({a},{b})",
            bad_characteristics=primefactors(a * b),
        )
    return AffineScheme.from_strings(("x", "y"), (f"x^{a}*y^{b}",), field, name=f"node({a},{b})")


def product_scheme(left: AffineScheme, right: AffineScheme) -> AffineScheme:
    """X × Y: объединение переменных (совпадающие имена справа получают суффикс) и уравнений."""
    if left.ring.field != right.ring.field:
        raise RingMismatchError(
            "Схемы над разными полями",
            details={"left": left.ring.field.to_text(), "right": right.ring.field.to_text()},
        )
    mapping = fresh_names(left.variables, right.variables)
    ring = PolyRing(left.ring.field, left.variables + tuple(mapping[v] for v in right.variables))
    gens = [rename_into(g, ring) for g in left.ideal.generators]
    gens += [rename_into(g, ring, mapping) for g in right.ideal.generators]
    name = f"{left.name or 'X'}x{right.name or 'Y'}"
    bad = tuple(sorted(set(left.bad_characteristics) | set(right.bad_characteristics)))
    LOG.debug("Произведение схем %s, переименование %s", name, mapping)
    return AffineScheme(Ideal(ring, tuple(gens)), name, bad)
