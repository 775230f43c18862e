# src/services/motive_service/rationality.py
# coding: utf-8
"""
Распознавание рациональности усечённого ряда.

Алгоритм Берлекэмпа — Мэсси над полем дробей Q(L) (поле sympy) находит
кратчайшую линейную рекурренцию, которой удовлетворяют все T+1 коэффициентов.
Знаменатель — многочлен связи, числитель — S·den mod t^(сложность).
После приведения к общему знаменателю коэффициенты переводятся обратно в
Z[L, L^-1]; результат принимается, только если свободный член знаменателя
имеет вид ±L^a и повторное разложение совпадает с рядом.
"""

from __future__ import annotations
import logging
from functools import reduce
from math import gcd, lcm
from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.fields import field

from src.common import settings
from src.services.motive_service.motive_class import MotiveClass
from src.services.motive_service.series import MotiveRational, MotiveSeries

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

_QL, _LF = field("L", QQ)


def _to_fraction_field(c: MotiveClass) -> Any:
    total = _QL.zero
    for e, k in c.coefficients.items():
        total += QQ(k) * _LF ** e
    return total


def berlekamp_massey(seq: Sequence[Any]) -> Tuple[List[Any], int]:
    """Многочлен связи C (C[0] = 1) и линейная сложность для последовательности над полем."""
    one, zero = _QL.one, _QL.zero
    C: List[Any] = [one]
    B: List[Any] = [one]
    complexity, m, b = 0, 1, one
    for n, s_n in enumerate(seq):
        d = s_n
        for i in range(1, complexity + 1):
            if i < len(C):
                d += C[i] * seq[n - i]
        if not d:
            m += 1
            continue
        coef = d / b
        shifted = [zero] * m + [coef * x for x in B]
        previous = list(C)
        size = max(len(C), len(shifted))
        C = [(C[i] if i < len(C) else zero) - (shifted[i] if i < len(shifted) else zero) for i in range(size)]
        if 2 * complexity <= n:
            complexity = n + 1 - complexity
            B, b, m = previous, d, 1
        else:
            m += 1
    while len(C) > 1 and not C[-1]:
        C.pop()
    return C, complexity


def _clear_denominators(fracs: Sequence[Any]) -> List[MotiveClass]:
    """Общий множитель, переводящий элементы Q(L) в Z[L] без общего содержания."""
    nonzero = [f for f in fracs if f]
    if not nonzero:
        return [MotiveClass.zero() for _ in fracs]
    common = reduce(lambda a, b: a.lcm(b), (f.denom for f in nonzero))
    polys = [f.numer * common.exquo(f.denom) if f else None for f in fracs]
    scale = 1
    for p in polys:
        if p is None:
            continue
        for c in p.coeffs():
            scale = lcm(scale, int(QQ.denom(c)))
    ints = []
    for p in polys:
        if p is None:
            ints.append({})
            continue
        ints.append({m[0]: int(QQ.numer(c * scale)) for m, c in p.items()})
    content = reduce(gcd, (abs(v) for d in ints for v in d.values()), 0) or 1
    return [MotiveClass.from_coeffs({e: v // content for e, v in d.items()}) for d in ints]


def detect_rationality(series: MotiveSeries, max_den_degree: Optional[int] = None) -> Optional[MotiveRational]:
    """Рациональная функция num/den, разложение которой совпадает с рядом до t^T, либо None."""
    cap = settings.RATIONALITY_MAX_DEGREE if max_den_degree is None else int(max_den_degree)
    seq = [_to_fraction_field(c) for c in series.coeffs]
    C, complexity = berlekamp_massey(seq)
    LOG.debug("Берлекэмп — Мэсси: сложность %d, степень связи %d (T=%d)", complexity, len(C) - 1, series.T)

    if len(C) - 1 > cap:
        LOG.debug("Степень знаменателя %d больше допустимой %d", len(C) - 1, cap)
        return None
    if 2 * complexity > series.T:
        LOG.debug("Недостаточно коэффициентов для подтверждения рекурренции сложности %d", complexity)
        return None

    num_fracs = []
    for n in range(complexity):
        acc = _QL.zero
        for k in range(min(n, len(C) - 1) + 1):
            acc += C[k] * seq[n - k]
        num_fracs.append(acc)

    cleared = _clear_denominators(list(C) + num_fracs)
    den, num = cleared[: len(C)], cleared[len(C):]
    if not den[0].is_unit():
        LOG.debug("Свободный член знаменателя %s не является ±L^a", den[0])
        return None
    unit = den[0].inverse()
    rational = MotiveRational(tuple(c * unit for c in num), tuple(c * unit for c in den))

    if rational.expand(series.T) != series:
        LOG.warning("Найденная рекурренция не воспроизводит ряд до t^%d", series.T)
        return None
    return rational


def _trim(poly: List[Any]) -> List[Any]:
    while poly and not poly[-1]:
        poly.pop()
    return poly


def divides(den: Sequence[Any], target: Sequence[Any]) -> bool:
    """Делит ли многочлен den многочлен target в Q(L)[t] (списки классов по степеням t)."""
    divisor = _trim([_to_fraction_field(MotiveClass.coerce(c)) for c in den])
    rest = _trim([_to_fraction_field(MotiveClass.coerce(c)) for c in target])
    if not divisor:
        return not rest
    while len(rest) >= len(divisor):
        q = rest[-1] / divisor[-1]
        shift = len(rest) - len(divisor)
        for i, c in enumerate(divisor):
            rest[shift + i] -= q * c
        _trim(rest)
    return not rest
