# src/services/algebra_service/renaming.py
# coding: utf-8
"""
Равенство идеалов с точностью до переименования переменных.

Ищется биекция π между реально входящими переменными I и J такая, что
π(I) = J как идеалы. Перебор — поиск с возвратом: на каждом шаге образ
каждой полностью означенной образующей I обязан лечь в J (нормальная форма
по базису Грёбнера J равна нулю), поэтому отсечение корректно. Первый проход
ограничивает кандидатов переменными с той же сигнатурой вхождений, второй
снимает это ограничение. Найденная биекция подтверждается взаимным вложением.
"""

from __future__ import annotations
import logging
import itertools
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.common import settings
from src.model.errors import BudgetExceededError, RingMismatchError
from src.services.algebra_service.groebner import GroebnerBasis, StepBudget, interreduce
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing, Polynomial, occurring_variables, rename_into, substitute

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

Signature = Tuple[Tuple[int, int, Tuple[int, ...]], ...]


def _signatures(gens: Sequence[Polynomial], ring: PolyRing, names: Sequence[str]) -> Dict[str, Signature]:
    """Для каждой переменной: мультимножество (число членов, степень, показатели переменной)."""
    sigs: Dict[str, Signature] = {}
    for name in names:
        idx = ring.index(name)
        items = []
        for g in gens:
            exps = sorted(m[idx] for m in g.keys())
            if any(exps):
                degree = max(sum(m) for m in g.keys())
                items.append((len(g), degree, tuple(exps)))
        sigs[name] = tuple(sorted(items))
    return sigs


def _variables_of(gens: Sequence[Polynomial], ring: PolyRing) -> List[str]:
    return [ring.variables[i] for i in occurring_variables(gens)]


class _RenamingSearch:
    def __init__(
        self,
        gens_i: List[Polynomial],
        ring_i: PolyRing,
        target: Ideal,
        gb_j: GroebnerBasis,
        vars_i: List[str],
        vars_j: List[str],
        budget: StepBudget,
        max_nodes: int,
    ):
        self.gens_i = gens_i
        self.ring_i = ring_i
        self.target = target
        self.gb_j = gb_j
        self.vars_i = vars_i
        self.vars_j = vars_j
        self.budget = budget
        self.max_nodes = max_nodes
        self.nodes = 0

        occurrences = {v: 0 for v in vars_i}
        gen_vars: List[List[str]] = []
        for g in gens_i:
            names = _variables_of([g], ring_i)
            gen_vars.append(names)
            for v in names:
                occurrences[v] += 1
        self.order = sorted(vars_i, key=lambda v: (-occurrences[v], vars_i.index(v)))
        position = {v: k for k, v in enumerate(self.order)}
        self.checks: List[List[Polynomial]] = [[] for _ in self.order]
        self.closed: List[Polynomial] = []
        for g, names in zip(gens_i, gen_vars):
            if names:
                self.checks[max(position[v] for v in names)].append(g)
            else:
                self.closed.append(g)

    def image(self, g: Polynomial, pi: Mapping[str, str]) -> Polynomial:
        return rename_into(g, self.target.ring, pi)

    def accept(self, pi: Mapping[str, str]) -> bool:
        images = tuple(self.image(g, pi) for g in self.gens_i)
        if not all(self.gb_j.contains(h, self.budget) for h in images):
            return False
        mapped = Ideal(self.target.ring, images)
        return mapped.groebner(self.budget).contains_ideal(self.target, self.budget)

    def run(self, sig_i: Optional[Dict[str, Signature]], sig_j: Optional[Dict[str, Signature]]) -> Optional[Dict[str, str]]:
        if not all(self.gb_j.contains(self.image(g, {}), self.budget) for g in self.closed):
            return None
        return self._backtrack(0, {}, set(), sig_i, sig_j)

    def _backtrack(self, depth, pi, used, sig_i, sig_j) -> Optional[Dict[str, str]]:
        if depth == len(self.order):
            return dict(pi) if self.accept(pi) else None
        v = self.order[depth]
        for w in self.vars_j:
            if w in used:
                continue
            if sig_i is not None and sig_i[v] != sig_j[w]:
                continue
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise BudgetExceededError("renaming_search", self.max_nodes, variables=len(self.order))
            pi[v] = w
            if all(self.gb_j.contains(self.image(g, pi), self.budget) for g in self.checks[depth]):
                used.add(w)
                found = self._backtrack(depth + 1, pi, used, sig_i, sig_j)
                used.discard(w)
                if found is not None:
                    return found
            del pi[v]
        return None


def equal_up_to_renaming(
    I: Ideal,
    J: Ideal,
    hint: Optional[Mapping[str, str]] = None,
    budget: Any = None,
    max_vars: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> Optional[Dict[str, str]]:
    """
    Возвращает биекцию {переменная I -> переменная J} с π(I) = J или None.
    hint — предполагаемое соответствие, проверяется первым.
    """
    if I.ring.field != J.ring.field:
        raise RingMismatchError(
            "Идеалы над разными полями",
            details={"left": I.ring.field.to_text(), "right": J.ring.field.to_text()},
        )
    counter = budget if isinstance(budget, StepBudget) else StepBudget(budget)
    cap = int(max_vars if max_vars is not None else settings.RENAMING_MAX_VARS)
    node_cap = int(max_nodes if max_nodes is not None else settings.RENAMING_MAX_CANDIDATES)

    gens_i = interreduce(I.generators, counter)
    gens_j = interreduce(J.generators, counter)
    vars_i = _variables_of(gens_i, I.ring)
    vars_j = _variables_of(gens_j, J.ring)
    if len(vars_i) != len(vars_j):
        LOG.debug("Переименование невозможно: %d и %d переменных", len(vars_i), len(vars_j))
        return None
    if len(vars_i) > cap:
        raise BudgetExceededError("renaming_vars", cap, variables=len(vars_i))

    target = Ideal(J.ring, tuple(gens_j))
    gb_j = target.groebner(counter)
    search = _RenamingSearch(list(gens_i), I.ring, target, gb_j, vars_i, vars_j, counter, node_cap)

    if hint:
        pi = {v: hint[v] for v in vars_i if v in hint}
        if len(pi) == len(vars_i) and sorted(pi.values()) == sorted(vars_j) and search.accept(pi):
            LOG.debug("Переименование подтверждено подсказкой")
            return pi

    sig_i = _signatures(gens_i, I.ring, vars_i)
    sig_j = _signatures(gens_j, J.ring, vars_j)
    found = search.run(sig_i, sig_j)
    if found is None:
        found = search.run(None, None)
    LOG.debug("Поиск переименования: %d узлов, результат %s", search.nodes, found)
    return found


def equal_up_to_signed_renaming(
    I: Ideal,
    J: Ideal,
    budget: Any = None,
    max_vars: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> Optional[Tuple[Dict[str, str], List[str]]]:
    """
    Переименование с точностью до знаков: набор S переменных J и биекция π
    с π(I) = J|_{v -> -v, v ∈ S}. Наборы перебираются по возрастанию размера;
    возвращает (π, sorted(S)) или None.
    """
    counter = budget if isinstance(budget, StepBudget) else StepBudget(budget)
    variables = J.occurring_variables()
    gens = J.ring.gens()
    for size in range(len(variables) + 1):
        for flipped in itertools.combinations(variables, size):
            if flipped:
                images = {v: -gens[v] if v in flipped else gens[v] for v in J.ring.variables}
                target = Ideal(J.ring, tuple(substitute(g, images) for g in J.generators))
            else:
                target = J
            pi = equal_up_to_renaming(I, target, budget=counter, max_vars=max_vars, max_nodes=max_nodes)
            if pi is not None:
                LOG.debug("Переименование найдено со сменой знака %s", list(flipped))
                return pi, sorted(flipped)
    return None
