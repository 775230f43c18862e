# src/services/motive_service/counting.py
# coding: utf-8
"""
Подсчёт F_p-точек V(I) полным перебором.

Переменные, не входящие в образующие, дают множитель p^(число свободных).
Входящие переменные делятся на внешний блок (перебор itertools.product) и
внутренний блок (numpy-сетка размера не больше INNER_BLOCK_LIMIT). Для каждого
члена значение на внутренней сетке вычисляется один раз; на каждой точке
внешнего блока остаётся взвешенная сумма массивов по модулю p.

При ARCMOT_COUNT_WORKERS > 1 значения первой внешней переменной
распределяются по пулу процессов. При заданном ARCMOT_COUNT_CACHE_DSN
результаты кэшируются в таблице point_counts.
"""

from __future__ import annotations
import itertools
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.common import settings
from src.model.errors import BudgetExceededError, PreconditionError
from src.services.algebra_service.fields import CoefficientField
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing, occurring_variables

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

# Максимальный размер numpy-сетки внутреннего блока
INNER_BLOCK_LIMIT = 2 ** 16

# (коэффициент mod p, показатели внешнего блока, показатели внутреннего блока)
Term = Tuple[int, Tuple[int, ...], Tuple[int, ...]]


# -------------------------
# Приведение по модулю p
# -------------------------

def reduce_mod_p(ideal: Ideal, p: int) -> Ideal:
    """Идеал над Q -> идеал над F_p с теми же переменными."""
    field = ideal.ring.field
    if field.is_prime_field:
        if field.characteristic != p:
            raise PreconditionError(
                f"Идеал задан над {field.to_text()}, запрошено p={p}",
                details={"field": field.to_text(), "prime": p},
            )
        return ideal
    target = PolyRing(CoefficientField.prime(p), ideal.ring.variables, ideal.ring.order)
    gens = tuple(
        target.from_terms({m: field.as_fraction(c) for m, c in g.items()})
        for g in ideal.generators
    )
    return Ideal(target, tuple(g for g in gens if g))


def ideal_key(ideal: Ideal) -> str:
    """Каноническая текстовая запись идеала (ключ кэша)."""
    return json.dumps(ideal.to_json(), sort_keys=True, ensure_ascii=False)


# -------------------------
# Перебор
# -------------------------

def _compile(ideal: Ideal, occurring: Sequence[int], n_outer: int) -> List[List[Term]]:
    field = ideal.ring.field
    p = field.characteristic
    compiled = []
    for g in ideal.generators:
        terms = []
        for m, c in g.items():
            exps = tuple(m[i] for i in occurring)
            terms.append((int(field.as_fraction(c)) % p, exps[:n_outer], exps[n_outer:]))
        compiled.append(terms)
    return compiled


def _inner_values(p: int, terms: List[List[Term]], n_inner: int) -> List[List[np.ndarray]]:
    """Значения внутренних частей членов на сетке F_p^n_inner."""
    grid = np.indices((p,) * n_inner, dtype=np.int64).reshape(n_inner, -1) if n_inner else np.zeros((0, 1), dtype=np.int64)
    size = grid.shape[1]
    tables = {}
    out = []
    for gen_terms in terms:
        values = []
        for c, _, inner in gen_terms:
            acc = np.full(size, c % p, dtype=np.int64)
            for var, e in enumerate(inner):
                if not e:
                    continue
                if e not in tables:
                    tables[e] = np.array([pow(v, e, p) for v in range(p)], dtype=np.int64)
                acc = (acc * tables[e][grid[var]]) % p
            values.append(acc)
        out.append(values)
    return out


def _count_block(p: int, terms: List[List[Term]], n_outer: int, n_inner: int, first: Optional[int]) -> int:
    """Число решений при фиксированной первой внешней переменной (или по всем, если first is None)."""
    inner = _inner_values(p, terms, n_inner)
    size = p ** n_inner
    ranges = [range(p)] * n_outer
    if first is not None:
        ranges[0] = (first,)
    total = 0
    for outer in itertools.product(*ranges):
        mask = np.ones(size, dtype=bool)
        for gen_terms, values in zip(terms, inner):
            acc = np.zeros(size, dtype=np.int64)
            for (_, outer_exps, _), value in zip(gen_terms, values):
                scalar = 1
                for v, e in zip(outer, outer_exps):
                    if e:
                        scalar = scalar * pow(v, e, p) % p
                if scalar:
                    acc = (acc + scalar * value) % p
            mask &= acc == 0
            if not mask.any():
                break
        total += int(np.count_nonzero(mask))
    return total


def _count_block_star(args: Tuple) -> int:
    return _count_block(*args)


def _inner_size(p: int, k: int) -> int:
    return min(k, max(1, int(math.log(INNER_BLOCK_LIMIT) // math.log(p))))


def count_points(
    ideal: Ideal,
    prime: Optional[int] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    cache_dsn: Optional[str] = None,
) -> int:
    """Точное число F_p-точек V(I); над Q идеал сначала приводится по модулю prime."""
    field = ideal.ring.field
    p = int(prime) if prime is not None else field.characteristic
    if p <= 0:
        raise PreconditionError("Для подсчёта точек нужно простое p", details={"field": field.to_text()})
    reduced = reduce_mod_p(ideal, p)

    dsn = settings.COUNT_CACHE_DSN if cache_dsn is None else cache_dsn
    key = ideal_key(reduced) if dsn else ""
    if dsn:
        from src.services.db_service.connection import get_engine
        from src.services.db_service.executor import fetch_count

        cached = fetch_count(get_engine(dsn), key, p)
        if cached is not None:
            LOG.debug("Подсчёт для p=%d взят из кэша", p)
            return cached

    count = _count(reduced, p, budget, workers)

    if dsn:
        from src.services.db_service.connection import get_engine
        from src.services.db_service.executor import store_count

        store_count(get_engine(dsn), key, p, count)
    return count


def _count(ideal: Ideal, p: int, budget: Optional[int], workers: Optional[int]) -> int:
    n = ideal.ring.ngens
    gens = [g for g in ideal.generators if g]
    if any(g.is_ground for g in gens):
        return 0
    occurring = occurring_variables(gens)
    k = len(occurring)
    free = n - k
    limit = settings.BUDGET_POINTS if budget is None else int(budget)
    if p ** k > limit:
        raise BudgetExceededError(
            "points", limit,
            f"Перебор F_{p}^{k} превышает бюджет {limit}",
            required_variables=k, prime=p,
        )
    if k == 0:
        return p ** free

    n_inner = _inner_size(p, k)
    n_outer = k - n_inner
    terms = _compile(Ideal(ideal.ring, tuple(gens)), occurring, n_outer)
    pool_size = settings.COUNT_WORKERS if workers is None else int(workers)
    LOG.debug(
        "Подсчёт над F_%d: %d входящих переменных (%d внешних, %d внутренних), %d свободных, процессов %d",
        p, k, n_outer, n_inner, free, pool_size,
    )

    if pool_size > 1 and n_outer >= 1:
        jobs = [(p, terms, n_outer, n_inner, v) for v in range(p)]
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            solutions = sum(pool.map(_count_block_star, jobs))
    else:
        solutions = _count_block(p, terms, n_outer, n_inner, None)
    return solutions * p ** free
