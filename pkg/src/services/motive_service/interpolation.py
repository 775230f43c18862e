# src/services/motive_service/interpolation.py
# coding: utf-8
"""
Восстановление класса [V] ∈ Z[L] по числам F_p-точек.

Берутся d+1 допустимых простых по возрастанию (кроме исключённых
характеристик), многочлен степени <= d интерполируется по Лагранжу, затем
проверяется на следующем допустимом простом. Расхождение означает, что
число точек не является многочленом степени <= d от q (или плохую редукцию).
"""

from __future__ import annotations
import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional

from sympy import Poly, Symbol, nextprime
from sympy.polys.polyfuncs import interpolate

from src.model.errors import InterpolationError, PreconditionError
from src.services.algebra_service.ideal import Ideal
from src.services.motive_service.counting import count_points
from src.services.motive_service.motive_class import MotiveClass

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

_Q = Symbol("q")


def admissible_primes(excluded: Iterable[int] = (), start: int = 2) -> Iterator[int]:
    """Простые >= start по возрастанию, кроме исключённых."""
    banned = {int(p) for p in excluded}
    p = nextprime(int(start) - 1)
    while True:
        if p not in banned:
            yield int(p)
        p = nextprime(p)


def class_from_counts(counts: Mapping[int, int]) -> MotiveClass:
    """Интерполяционный многочлен по точкам q -> #V(F_q) как класс от L."""
    if not counts:
        raise PreconditionError("Нет подсчётов для интерполяции")
    data = sorted((int(q), int(c)) for q, c in counts.items())
    expr = interpolate(data, _Q) if len(data) > 1 else data[0][1]
    poly = Poly(expr, _Q)
    coeffs: Dict[int, int] = {}
    for (e,), c in poly.terms():
        if not c.is_Integer:
            raise InterpolationError(
                "Интерполяционный многочлен имеет нецелые коэффициенты",
                details={"counts": {str(q): c for q, c in data}, "polynomial": str(expr)},
            )
        coeffs[e] = int(c)
    return MotiveClass.from_coeffs(coeffs)


def interpolate_class(
    ideal: Ideal,
    degree_bound: int,
    excluded_chars: Iterable[int] = (),
    budget: Optional[int] = None,
    start_prime: int = 2,
    workers: Optional[int] = None,
    cache_dsn: Optional[str] = None,
) -> MotiveClass:
    """Класс степени <= degree_bound, подтверждённый на контрольном простом."""
    if degree_bound < 0:
        raise PreconditionError("Граница степени должна быть >= 0", details={"degree_bound": degree_bound})
    if ideal.ring.field.is_prime_field:
        raise PreconditionError("Интерполяция требует идеала над Q", details={"field": ideal.ring.field.to_text()})

    primes_iter = admissible_primes(excluded_chars, start_prime)
    primes: List[int] = [next(primes_iter) for _ in range(degree_bound + 2)]
    *sample, check = primes
    counts = {p: count_points(ideal, p, budget=budget, workers=workers, cache_dsn=cache_dsn) for p in sample}
    LOG.debug("Интерполяция по простым %s: %s", sample, counts)
    cls = class_from_counts(counts)

    expected = count_points(ideal, check, budget=budget, workers=workers, cache_dsn=cache_dsn)
    predicted = cls.evaluate_at_q(check)
    if predicted != expected:
        raise InterpolationError(
            f"Контрольное простое {check}: предсказано {predicted}, подсчитано {expected}",
            details={
                "degree_bound": degree_bound,
                "primes": sample,
                "verification_prime": check,
                "counts": {str(p): c for p, c in counts.items()},
                "predicted": str(predicted),
                "counted": expected,
            },
        )
    LOG.debug("Класс %s подтверждён на p=%d", cls, check)
    return cls
