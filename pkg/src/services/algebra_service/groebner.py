# src/services/algebra_service/groebner.py
# coding: utf-8
"""
Базисы Грёбнера: алгоритм Бухбергера с критериями Гебауэра–Мёллера,
полная редукция (нормальная форма), интерредукция и стандартные мономы.

Все вычисления детерминированы: делители перебираются по возрастанию старших
мономов, пары выбираются по (порядок НОК, индексы), результат сортируется по
убыванию старших мономов. Число шагов редукции ограничено бюджетом
(settings.BUDGET_GROEBNER); при превышении бросается BudgetExceededError.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Iterable, List, Optional, Sequence, Set, Tuple

from src.common import settings
from src.model.errors import BudgetExceededError, InfiniteQuotientError, RingMismatchError
from src.services.algebra_service.polynomial import Monomial, Polynomial, to_string

if TYPE_CHECKING:
    from src.services.algebra_service.ideal import Ideal

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


class StepBudget:
    """Счётчик шагов редукции одного вычисления."""

    def __init__(self, limit: Optional[int] = None, name: str = "groebner"):
        self.limit = int(limit if limit is not None else settings.BUDGET_GROEBNER)
        self.name = name
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceededError(self.name, self.limit, steps=self.used)


def _as_budget(budget: Any) -> StepBudget:
    if isinstance(budget, StepBudget):
        return budget
    return StepBudget(budget)


# -------------------------
# Редукция
# -------------------------

def reduce_polynomial(f: Polynomial, divisors: Sequence[Polynomial], budget: Any = None) -> Polynomial:
    """
    Полная редукция f по списку приведённых (LC = 1) делителей:
    ни один член результата не делится на старший моном делителя.
    """
    budget = _as_budget(budget)
    ring = f.ring
    divisors = [g for g in divisors if g]
    if not divisors or not f:
        return f.copy()
    monomial_div = ring.monomial_div
    leads = [(g.LM, g, g.LC) for g in divisors]
    one = ring.domain.one
    p = f.copy()
    r = ring.zero
    while p:
        m, c = p.LT
        for lm, g, lc in leads:
            q = monomial_div(m, lm)
            if q is not None:
                p = p - g.mul_term((q, c if lc == one else c / lc))
                budget.tick()
                break
        else:
            r[m] = c
            del p[m]
    return r


def _sort_by_lead(polys: Iterable[Polynomial], reverse: bool = False) -> List[Polynomial]:
    polys = list(polys)
    if not polys:
        return polys
    order = polys[0].ring.order
    return sorted(polys, key=lambda g: order(g.LM), reverse=reverse)


def interreduce(polys: Iterable[Polynomial], budget: Any = None) -> List[Polynomial]:
    """
    Интерредукция: каждый многочлен приведён (LC = 1) и полностью редуцирован
    по остальным; нули отброшены. Результат отсортирован по убыванию старших
    мономов и зависит только от множества входных многочленов.
    """
    budget = _as_budget(budget)
    current: List[Polynomial] = []
    seen: Set[str] = set()
    for p in polys:
        if not p:
            continue
        q = p.monic()
        key = to_string(q)
        if key not in seen:
            seen.add(key)
            current.append(q)
    current = _sort_by_lead(current)
    changed = True
    while changed:
        changed = False
        for idx, p in enumerate(current):
            others = current[:idx] + current[idx + 1:]
            r = reduce_polynomial(p, others, budget)
            if r != p:
                changed = True
                rest = others
                if r:
                    rest = others + [r.monic()]
                current = _sort_by_lead(_dedupe(rest))
                break
    return _sort_by_lead(current, reverse=True)


def _dedupe(polys: Iterable[Polynomial]) -> List[Polynomial]:
    out: List[Polynomial] = []
    seen: Set[str] = set()
    for p in polys:
        key = to_string(p)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


# -------------------------
# Бухбергер
# -------------------------

def _spoly(p1: Polynomial, p2: Polynomial) -> Polynomial:
    ring = p1.ring
    lcm = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm, p1.LM)
    m2 = ring.monomial_div(lcm, p2.LM)
    return p1.mul_monom(m1) - p2.mul_monom(m2)


def buchberger(polys: Sequence[Polynomial], budget: Any = None) -> List[Polynomial]:
    """Приведённый базис Грёбнера идеала, порождённого polys."""
    budget = _as_budget(budget)
    f = interreduce(polys, budget)
    if not f:
        return []
    ring = f[0].ring
    if any(not any(p.LM) for p in f):
        return [ring.one]
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    basis: List[Polynomial] = []
    G: Set[int] = set()
    CP: Set[Tuple[int, int]] = set()

    def update(G: Set[int], B: Set[Tuple[int, int]], ih: int) -> Tuple[Set[int], Set[Tuple[int, int]]]:
        h = basis[ih]
        mh = h.LM
        C = sorted(G)
        D: List[Tuple[int, int]] = []
        while C:
            ig = C.pop(0)
            mg = basis[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, basis[ip].LM)) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))

        E = {(i, j) for i, j in D if monomial_mul(mh, basis[j].LM) != monomial_lcm(mh, basis[j].LM)}

        B_new = set()
        for ig1, ig2 in B:
            mg1, mg2 = basis[ig1].LM, basis[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if monomial_div(basis[ig].LM, mh) is None}
        G_new.add(ih)
        return G_new, B_new

    for h in _sort_by_lead(f):
        basis.append(h)
        G, CP = update(G, CP, len(basis) - 1)

    pairs_done = 0
    while CP:
        ig1, ig2 = min(CP, key=lambda pr: (order(monomial_lcm(basis[pr[0]].LM, basis[pr[1]].LM)), min(pr), max(pr)))
        CP.remove((ig1, ig2))
        pairs_done += 1
        budget.tick()
        s = _spoly(basis[ig1], basis[ig2])
        divisors = _sort_by_lead(basis[i] for i in sorted(G))
        h = reduce_polynomial(s, divisors, budget)
        if h:
            h = h.monic()
            if not any(h.LM):
                LOG.debug("Бухбергер: идеал единичный после %d пар", pairs_done)
                return [ring.one]
            basis.append(h)
            G, CP = update(G, CP, len(basis) - 1)

    LOG.debug("Бухбергер: %d пар, %d элементов, %d шагов", pairs_done, len(G), budget.used)
    minimal = [basis[i] for i in sorted(G)]
    return _reduce_basis(minimal, budget)


def _reduce_basis(G: List[Polynomial], budget: StepBudget) -> List[Polynomial]:
    """Приведённый базис из минимального: редукция каждого элемента по остальным."""
    reduced: List[Polynomial] = []
    ordered = _sort_by_lead(G)
    for idx, g in enumerate(ordered):
        others = ordered[:idx] + ordered[idx + 1:]
        r = reduce_polynomial(g, others, budget)
        if r:
            reduced.append(r.monic())
    return _sort_by_lead(reduced, reverse=True)


# -------------------------
# Базис как объект
# -------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """Приведённый базис Грёбнера идеала относительно порядка кольца."""

    ideal: "Ideal"
    basis: Tuple[Polynomial, ...]
    steps: int = 0

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.LM for g in self.basis]

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and not any(self.basis[0].LM)

    def normal_form(self, poly: Polynomial, budget: Any = None) -> Polynomial:
        return normal_form(poly, self, budget)

    def contains(self, poly: Polynomial, budget: Any = None) -> bool:
        return not normal_form(poly, self, budget)

    def contains_ideal(self, other: "Ideal", budget: Any = None) -> bool:
        return all(self.contains(g, budget) for g in other.generators)

    def standard_monomials(self) -> List[Monomial]:
        return standard_monomials(self)

    def to_strings(self) -> List[str]:
        return [to_string(g) for g in self.basis]

    def __len__(self) -> int:
        return len(self.basis)


def groebner(ideal: "Ideal", budget: Any = None) -> GroebnerBasis:
    """Приведённый базис Грёбнера; нулевой идеал даёт пустой базис."""
    counter = _as_budget(budget)
    basis = buchberger(list(ideal.generators), counter)
    return GroebnerBasis(ideal=ideal, basis=tuple(basis), steps=counter.used)


def normal_form(poly: Polynomial, G: GroebnerBasis, budget: Any = None) -> Polynomial:
    """Остаток от полной редукции poly по базису G."""
    if poly.ring != G.ring.sympy_ring:
        raise RingMismatchError("Многочлен и базис Грёбнера из разных колец")
    return reduce_polynomial(poly, _sort_by_lead(G.basis), budget)


def standard_monomials(G: GroebnerBasis) -> List[Monomial]:
    """
    Мономы, не делящиеся ни на один старший моном базиса, по возрастанию
    порядка кольца. Фактор конечномерен, только если для каждой переменной
    среди старших мономов есть её чистая степень.
    """
    ring = G.ring
    n = ring.ngens
    leads = G.leading_monomials
    if G.is_unit:
        return []
    bounds: List[int] = []
    for i in range(n):
        pure = [lm[i] for lm in leads if lm[i] and all(e == 0 for j, e in enumerate(lm) if j != i)]
        if not pure:
            raise InfiniteQuotientError(
                f"Фактор бесконечномерен: переменная {ring.variables[i]!r} не нильпотентна по модулю идеала",
                details={"variable": ring.variables[i]},
            )
        bounds.append(min(pure))

    def divisible(m: Monomial) -> bool:
        return any(all(a >= b for a, b in zip(m, lm)) for lm in leads)

    result: List[Monomial] = []

    def walk(prefix: List[int], i: int) -> None:
        if i == n:
            result.append(tuple(prefix))
            return
        for e in range(bounds[i]):
            candidate = prefix + [e] + [0] * (n - i - 1)
            if divisible(tuple(candidate)):
                break
            walk(prefix + [e], i + 1)

    walk([], 0)
    result = [m for m in result if not divisible(m)]
    order = ring.sympy_ring.order
    return sorted(result, key=order)
