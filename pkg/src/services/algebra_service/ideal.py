# src/services/algebra_service/ideal.py
# coding: utf-8
"""
Идеалы кольца многочленов.

Ideal хранит кольцо и список ненулевых образующих; порядок образующих —
только метаданные представления, семантическое равенство — равенство
порождённых идеалов (проверяется через базисы Грёбнера).
"""

from __future__ import annotations
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.common import settings
from src.model.errors import BudgetExceededError, PreconditionError, RingMismatchError
from src.services.algebra_service.groebner import GroebnerBasis, groebner, interreduce
from src.services.algebra_service.parser import parse
from src.services.algebra_service.polynomial import (
    PolyRing,
    Polynomial,
    occurring_variables,
    ring_of,
    to_string,
)

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: PolyRing
    generators: Tuple[Polynomial, ...] = ()
    _cache: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        gens = []
        sring = self.ring.sympy_ring
        for g in self.generators:
            if g.ring != sring:
                raise RingMismatchError(
                    "Образующая идеала не принадлежит его кольцу",
                    details={"generator": to_string(g), "ring": self.ring.to_dict()},
                )
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    # -------------------------
    # Конструкторы
    # -------------------------

    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Iterable[str]) -> "Ideal":
        return cls(ring, tuple(parse(t, ring) for t in texts))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def maximal_at_origin(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, tuple(ring.sympy_ring.gens))

    # -------------------------
    # Базис Грёбнера (кэшируется на экземпляре)
    # -------------------------

    def groebner(self, budget: Any = None) -> GroebnerBasis:
        gb = self._cache.get("groebner")
        if gb is None:
            gb = groebner(self, budget)
            self._cache["groebner"] = gb
        return gb

    def _monic_generators(self) -> frozenset:
        monic = self._cache.get("monic")
        if monic is None:
            monic = frozenset(to_string(g.monic()) for g in self.generators)
            self._cache["monic"] = monic
        return monic

    def contains(self, poly: Polynomial, budget: Any = None) -> bool:
        # образующая с точностью до скаляра лежит в идеале без базиса
        if not poly or to_string(poly.monic()) in self._monic_generators():
            return True
        return self.groebner(budget).contains(poly, budget)

    def is_unit(self, budget: Any = None) -> bool:
        return self.groebner(budget).is_unit

    def equals(self, other: "Ideal", budget: Any = None) -> bool:
        """Равенство порождённых идеалов (сравнение приведённых базисов)."""
        if self.ring != other.ring:
            raise RingMismatchError("Сравнение идеалов из разных колец")
        if self._monic_generators() == other._monic_generators():
            return True
        return self.groebner(budget).to_strings() == other.groebner(budget).to_strings()

    # -------------------------
    # Операции
    # -------------------------

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ring != other.ring:
            raise RingMismatchError("Сумма идеалов из разных колец")
        return Ideal(self.ring, self.generators + other.generators)

    def interreduced(self, budget: Any = None) -> "Ideal":
        return Ideal(self.ring, tuple(interreduce(self.generators, budget)))

    def occurring_variables(self) -> List[str]:
        return [self.ring.variables[i] for i in occurring_variables(self.generators)]

    def generator_strings(self) -> List[str]:
        return [to_string(g) for g in self.generators]

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.ring.field.to_text(),
            "variables": list(self.ring.variables),
            "generators": self.generator_strings(),
        }

    def __repr__(self) -> str:
        return f"Ideal({self.generator_strings()!r} in {list(self.ring.variables)})"


def ideal_from_polys(polys: Sequence[Polynomial], ring: Optional[PolyRing] = None) -> Ideal:
    if ring is None:
        if not polys:
            raise PreconditionError("Нельзя определить кольцо пустого списка образующих")
        ring = ring_of(polys[0])
    return Ideal(ring, tuple(polys))


def ideal_power(ideal: Ideal, n: int) -> Ideal:
    """Идеал, порождённый всеми n-кратными произведениями образующих."""
    if n < 1:
        raise PreconditionError("Степень идеала должна быть >= 1", details={"n": n})
    gens = list(ideal.generators)
    products: List[Polynomial] = []
    seen = set()
    for combo in itertools.combinations_with_replacement(range(len(gens)), n):
        prod = ideal.ring.one
        for i in combo:
            prod = prod * gens[i]
        key = to_string(prod)
        if prod and key not in seen:
            seen.add(key)
            products.append(prod)
    return Ideal(ideal.ring, tuple(products))


def dimension(ideal: Ideal, budget: Any = None, subset_cap: Optional[int] = None) -> int:
    """
    Размерность Крулля: мощность наибольшего множества переменных S такого,
    что ни один старший моном базиса Грёбнера не лежит в k[S].
    Единичный идеал даёт -1.
    """
    gb = ideal.groebner(budget)
    if gb.is_unit:
        return -1
    n = ideal.ring.ngens
    cap = int(subset_cap if subset_cap is not None else settings.KRULL_SUBSET_CAP)
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in gb.leading_monomials]
    checked = 0
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            checked += 1
            if checked > cap:
                raise BudgetExceededError("krull_subsets", cap, variables=n)
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                LOG.debug("Размерность %d: независимое множество %s", size, subset)
                return size
    return 0
