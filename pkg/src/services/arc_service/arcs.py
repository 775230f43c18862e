# src/services/arc_service/arcs.py
# coding: utf-8
"""
Струи, обобщённые пространства дуг и пространства автодуг.

arc_space(X, 𝔫): для каждой переменной x_i схемы X берётся общая дуга
α_i = Σ_j a_i_j·b_j по базису B толстой точки; каждое уравнение f схемы
вычисляется на (α_1, ..., α_d) в алгебре 𝔫 через структурные константы,
и координаты результата по B — многочлены от a_i_j — порождают идеал дуг.

Сетка переменных: a_<i>_<j>, i — номер переменной источника, j — номер
базисного монома (по возрастанию порядка кольца толстой точки).
Для сверки с таблицами уравнений в плоской нумерации a0, a1, ... в
provenance записывается индекс каждой переменной сетки в этой нумерации.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.model.errors import PreconditionError, RingMismatchError
from src.services.algebra_service.groebner import interreduce
from src.services.algebra_service.ideal import Ideal, ideal_power
from src.services.algebra_service.polynomial import PolyRing, Polynomial, rename_into, to_string
from src.services.arc_service.fat_point import FatPoint, Vector, make_fat_point
from src.services.arc_service.scheme import AffineScheme

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


@dataclass(frozen=True, eq=False)
class ArcPresentation:
    source: AffineScheme
    fat: FatPoint
    ring: PolyRing
    grid: Tuple[Tuple[str, ...], ...]
    generators: Tuple[Polynomial, ...]
    raw_generators: Tuple[Polynomial, ...] = ()
    provenance: Dict[str, Any] = field(default_factory=dict)
    _cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.ring.variables

    @property
    def ideal(self) -> Ideal:
        ideal = self._cache.get("ideal")
        if ideal is None:
            ideal = Ideal(self.ring, self.generators)
            self._cache["ideal"] = ideal
        return ideal

    @property
    def flat_index(self) -> Dict[str, int]:
        return dict(self.provenance.get("flat_index", {}))

    def as_scheme(self, name: Optional[str] = None) -> AffineScheme:
        return AffineScheme(
            self.ideal,
            name or f"arc({self.source.name or 'X'},{self.fat.name or 'n'})",
            self.source.bad_characteristics,
        )

    def generator_strings(self) -> List[str]:
        return [to_string(g) for g in self.generators]

    def flat_ideal(self, texts: Sequence[str]) -> Ideal:
        """
        Идеал в кольце сетки по уравнениям, записанным в плоской нумерации
        a0, a1, ... (служебные переменные источника и толстой точки в них не входят).
        """
        index = self.flat_index
        size = max(index.values(), default=-1) + 1
        flat_ring = PolyRing(self.ring.field, tuple(f"a{k}" for k in range(size)))
        mapping = {f"a{k}": name for name, k in index.items()}
        polys = [rename_into(flat_ring.parse(t), self.ring, mapping) for t in texts]
        return Ideal(self.ring, tuple(polys))

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": self.source.to_json(),
            "fat": self.fat.to_json(),
            "grid": [list(row) for row in self.grid],
            "generators": self.generator_strings(),
            "provenance": self.provenance,
        }

    def __repr__(self) -> str:
        return f"ArcPresentation({len(self.variables)} vars, {len(self.generators)} generators)"


# -------------------------
# Плоская нумерация
# -------------------------

def flat_basis_order(fat: FatPoint) -> List[int]:
    """
    Номера базисных мономов в порядке плоской нумерации: по убыванию
    лексикографически, старшая переменная — последняя.
    """
    return sorted(range(fat.length), key=lambda j: tuple(reversed(fat.basis[j])), reverse=True)


def flat_indices(source_variables: int, fat: FatPoint, grid: Sequence[Sequence[str]]) -> Dict[str, int]:
    offset = source_variables + fat.ring.ngens
    position = {j: jp for jp, j in enumerate(flat_basis_order(fat))}
    return {
        grid[i][j]: offset + position[j] * source_variables + i
        for i in range(source_variables)
        for j in range(fat.length)
    }


# -------------------------
# Построения
# -------------------------

def _evaluate_on_arcs(f: Polynomial, arcs: List[Vector], fat: FatPoint, ring: PolyRing) -> Vector:
    """Значение f(α_1, ..., α_d) в алгебре толстой точки."""
    zero = ring.zero
    powers: Dict[Tuple[int, int], Vector] = {}

    def arc_power(i: int, e: int) -> Vector:
        key = (i, e)
        if key not in powers:
            powers[key] = arcs[i] if e == 1 else fat.multiply(arc_power(i, e - 1), arcs[i])
        return powers[key]

    convert = ring.sympy_ring.domain.convert_from
    result = [zero] * fat.length
    for monom, coeff in f.items():
        term = fat.unit_vector(zero, convert(coeff, f.ring.domain))
        for i, e in enumerate(monom):
            if e:
                term = fat.multiply(term, arc_power(i, e))
        result = [a + b for a, b in zip(result, term)]
    return result


def arc_space(X: AffineScheme, fat: FatPoint, budget: Any = None, construction: str = "arc_space") -> ArcPresentation:
    """Обобщённое пространство дуг ∇_𝔫 X."""
    if X.ring.field != fat.field:
        raise RingMismatchError(
            "Схема и толстая точка над разными полями",
            details={"scheme": X.ring.field.to_text(), "fat": fat.field.to_text()},
        )
    d = X.ring.ngens
    grid = tuple(tuple(f"a_{i}_{j}" for j in range(fat.length)) for i in range(d))
    ring = PolyRing(X.ring.field, tuple(v for row in grid for v in row))
    gens = ring.gens()
    arcs = [[gens[name] for name in row] for row in grid]

    raw: List[Polynomial] = []
    for f in X.ideal.generators:
        raw.extend(c for c in _evaluate_on_arcs(f, arcs, fat, ring) if c)
    generators = interreduce(raw, budget)
    LOG.debug(
        "∇ %s по %s: %d переменных сетки, %d -> %d уравнений",
        X.name or "X", fat.name or "n", ring.ngens, len(raw), len(generators),
    )

    provenance = {
        "construction": construction,
        "source_generators": len(X.ideal.generators),
        "fat_length": fat.length,
        "raw_generators": len(raw),
        "generators": len(generators),
        "grid_variables": ring.ngens,
        "bookkeeping_variables": [f"a{k}" for k in range(d + fat.ring.ngens)],
        "flat_basis_order": [fat.basis_strings()[j] for j in flat_basis_order(fat)],
        "flat_index": flat_indices(d, fat, grid),
    }
    return ArcPresentation(
        source=X,
        fat=fat,
        ring=ring,
        grid=grid,
        generators=tuple(generators),
        raw_generators=tuple(raw),
        provenance=provenance,
    )


def jet(X: AffineScheme, point: Optional[Sequence[Any]], n: int, budget: Any = None) -> FatPoint:
    """n-струя X в точке: (I сдвинутой схемы) + (переменные)^n."""
    if n < 1:
        raise PreconditionError("Порядок струи должен быть >= 1", details={"n": n})
    moved = X.translate(point)
    maximal = ideal_power(Ideal.maximal_at_origin(X.ring), n)
    return make_fat_point(moved.ideal + maximal, name=f"J{n}({X.name or 'X'})", budget=budget)


def auto_arc(X: AffineScheme, point: Optional[Sequence[Any]], n: int, budget: Any = None) -> ArcPresentation:
    """Пространство автодуг 𝒜_n(X, p) = ∇_{J^n} J^n."""
    J = jet(X, point, n, budget)
    source = AffineScheme(Ideal(J.ring, J.groebner.basis), J.name, X.bad_characteristics)
    presentation = arc_space(source, J, budget, construction="auto_arc")
    presentation.provenance.update({
        "order": n,
        "point": [str(c) for c in X.normalize_point(point)],
        "scheme": X.name,
    })
    return presentation
