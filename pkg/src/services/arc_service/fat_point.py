# src/services/arc_service/fat_point.py
# coding: utf-8
"""
Толстые точки: локальные конечномерные алгебры k[x]/J.

FatPoint хранит идеал J, его базис Грёбнера, базис стандартных мономов B
(по возрастанию порядка кольца, первым идёт 1) и длину ℓ = |B|.
Умножение в алгебре задаётся структурными константами b_i·b_j = Σ c_ijk b_k,
которые считаются один раз через нормальные формы.

Локальность проверяется явно: каждая переменная нильпотентна, v^ℓ ∈ J.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.model.errors import InfiniteQuotientError, NonLocalFatPointError, RingMismatchError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.groebner import GroebnerBasis, standard_monomials
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import (
    Monomial,
    PolyRing,
    Polynomial,
    format_monomial,
    rename_into,
    to_string,
)

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

# Вектор координат элемента алгебры по базису B; координаты лежат в любом
# кольце многочленов над тем же полем (для дуг — в кольце переменных сетки).
Vector = List[Polynomial]


@dataclass(frozen=True, eq=False)
class FatPoint:
    ideal: Ideal
    groebner: GroebnerBasis
    basis: Tuple[Monomial, ...]
    name: str = ""
    _cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    @property
    def field(self) -> CoefficientField:
        return self.ring.field

    @property
    def length(self) -> int:
        return len(self.basis)

    def basis_strings(self) -> List[str]:
        return [format_monomial(self.ring.variables, m) or "1" for m in self.basis]

    def index_of(self, monom: Monomial) -> int:
        index = self._cache.get("index")
        if index is None:
            index = {m: i for i, m in enumerate(self.basis)}
            self._cache["index"] = index
        return index[tuple(monom)]

    # -------------------------
    # Структура алгебры
    # -------------------------

    def coordinates(self, poly: Polynomial) -> List[Any]:
        """Координаты класса poly по базису B (элементы домена поля)."""
        nf = self.groebner.normal_form(poly)
        coords = [self.field.domain.zero] * self.length
        for monom, coeff in nf.items():
            coords[self.index_of(monom)] = coeff
        return coords

    @property
    def structure_constants(self) -> Dict[Tuple[int, int], List[Tuple[int, Any]]]:
        """(i, j) -> [(k, c_ijk), ...] только с ненулевыми c_ijk, i <= j."""
        table = self._cache.get("structure")
        if table is None:
            table = {}
            for i, bi in enumerate(self.basis):
                for j in range(i, self.length):
                    bj = self.basis[j]
                    prod = self.ring.monomial(tuple(a + b for a, b in zip(bi, bj)))
                    coords = self.coordinates(prod)
                    table[(i, j)] = [(k, c) for k, c in enumerate(coords) if c]
            self._cache["structure"] = table
            LOG.debug("Структурные константы %s: %d пар", self.name or "fat point", len(table))
        return table

    def unit_vector(self, zero: Polynomial, value: Any = None) -> Vector:
        """Вектор value·1 с координатами в кольце элемента zero."""
        vec = [zero] * self.length
        vec[self.index_of(tuple([0] * self.ring.ngens))] = zero.ring.one if value is None else zero.ring.ground_new(value)
        return vec

    def multiply(self, u: Vector, v: Vector) -> Vector:
        """Произведение элементов алгебры, заданных векторами координат."""
        zero = u[0].ring.zero if u else None
        result = [zero] * self.length
        nonzero_u = [(i, x) for i, x in enumerate(u) if x]
        nonzero_v = [(j, y) for j, y in enumerate(v) if y]
        constants = self.structure_constants
        for i, x in nonzero_u:
            for j, y in nonzero_v:
                entries = constants[(i, j) if i <= j else (j, i)]
                if not entries:
                    continue
                xy = x * y
                for k, c in entries:
                    result[k] = result[k] + xy * c
        return result

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "field": self.field.to_text(),
            "variables": list(self.ring.variables),
            "generators": self.groebner.to_strings(),
            "basis": self.basis_strings(),
            "length": self.length,
        }

    def __repr__(self) -> str:
        return f"FatPoint({self.name or self.groebner.to_strings()!r}, length={self.length})"


def make_fat_point(ideal: Ideal, name: str = "", budget: Any = None) -> FatPoint:
    """
    Строит толстую точку по нульмерному идеалу.

    :raises NonLocalFatPointError: идеал единичный или переменная не нильпотентна
    :raises InfiniteQuotientError: фактор бесконечномерен
    """
    gb = ideal.groebner(budget)
    if gb.is_unit:
        raise NonLocalFatPointError("Единичный идеал не задаёт толстую точку", details={"ideal": ideal.generator_strings()})
    basis = tuple(standard_monomials(gb))
    length = len(basis)
    for name_v, v in ideal.ring.gens().items():
        if not gb.contains(v ** length, budget):
            raise NonLocalFatPointError(
                f"Переменная {name_v!r} не нильпотентна: точка не локальна в начале координат",
                details={"variable": name_v, "generators": ideal.generator_strings()},
            )
    LOG.debug("Толстая точка %s: длина %d", name or ideal.generator_strings(), length)
    return FatPoint(ideal=ideal, groebner=gb, basis=basis, name=name)


def fat_point_from_strings(
    variables: Sequence[str],
    generators: Sequence[str],
    field: Optional[CoefficientField] = None,
    name: str = "",
) -> FatPoint:
    ring = PolyRing(field or CoefficientField.rationals(), tuple(variables))
    return make_fat_point(Ideal.from_strings(ring, generators), name=name)


def linear_fat_point(m: int, field: Optional[CoefficientField] = None, variable: str = "t") -> FatPoint:
    """Линейная толстая точка k[t]/(t^m)."""
    if m < 1:
        raise InfiniteQuotientError("Длина линейной толстой точки должна быть >= 1", details={"m": m})
    ring = PolyRing(field or CoefficientField.rationals(), (variable,))
    return make_fat_point(Ideal(ring, (ring.gen(variable) ** m,)), name=f"l{m}")


def fresh_names(taken: Sequence[str], names: Sequence[str]) -> Dict[str, str]:
    used = set(taken)
    mapping: Dict[str, str] = {}
    for v in names:
        candidate, k = v, 2
        while candidate in used:
            candidate = f"{v}_{k}"
            k += 1
        used.add(candidate)
        mapping[v] = candidate
    return mapping


def product_fat_point(left: FatPoint, right: FatPoint) -> FatPoint:
    """Произведение толстых точек; совпадающие имена правой переименовываются."""
    if left.field != right.field:
        raise RingMismatchError(
            "Толстые точки над разными полями",
            details={"left": left.field.to_text(), "right": right.field.to_text()},
        )
    mapping = fresh_names(left.ring.variables, right.ring.variables)
    ring = PolyRing(left.field, left.ring.variables + tuple(mapping[v] for v in right.ring.variables))
    gens = [rename_into(g, ring) for g in left.groebner.basis]
    gens += [rename_into(g, ring, mapping) for g in right.groebner.basis]
    name = f"{left.name or 'n'}x{right.name or 'm'}"
    product = make_fat_point(Ideal(ring, tuple(gens)), name=name)
    LOG.debug("Произведение толстых точек %s: %s", name, [to_string(g) for g in gens])
    return product
