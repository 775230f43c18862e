# src/services/reduction_service/heuristic.py
# coding: utf-8
"""
Эвристическая редукция (исключение нильрадикала) идеала пространства дуг.

Цикл до неподвижной точки:
  1. интерредукция образующих;
  2. одночлен c·m заменяется бесквадратной частью m;
  3. чистая степень c·v^e убивает v (v -> 0);
  4. образующая c·v + g, где v не входит в g, даёт подстановку v -> -g/c;
  5. повтор, пока ни одно правило не сработало.

Каждый шаг корректен для множества точек: итоговый идеал лежит между
исходным и его радикалом. Флаг RADICAL_CERTIFIED ставится, когда остаток пуст
или состоит из бесквадратных одночленов; иначе HEURISTIC_FIXPOINT.
Убийство переменной подтверждается сертификатом: показателем e с v^e ∈ I
(по модулю уже подтверждённых переменных).
Переменные без сертификата снимают флаг RADICAL_CERTIFIED.
"""

from __future__ import annotations
import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from src.model.errors import BudgetExceededError
from src.services.algebra_service.groebner import StepBudget, interreduce
from src.services.algebra_service.ideal import Ideal
from src.services.algebra_service.polynomial import PolyRing, Polynomial, occurring_variables, to_string
from src.services.arc_service.arcs import ArcPresentation

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

# Максимальный показатель при проверке v^e ∈ I
CERTIFY_MAX_EXPONENT = 32


class ReductionFlag(str, enum.Enum):
    RADICAL_CERTIFIED = "radical-certified"
    HEURISTIC_FIXPOINT = "heuristic-fixpoint"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class ReducedPresentation:
    ring: PolyRing
    killed: Tuple[str, ...]
    substitutions: Dict[str, Polynomial]
    free: Tuple[str, ...]
    residual: Tuple[Polynomial, ...]
    flag: ReductionFlag
    kill_certificates: Dict[str, Optional[int]] = field(default_factory=dict)
    rules_fired: Dict[str, int] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.flag is ReductionFlag.RADICAL_CERTIFIED

    @property
    def kills_certified(self) -> bool:
        """Каждая убитая переменная подтверждена сертификатом v^e ∈ I."""
        return all(self.kill_certificates.get(v) is not None for v in self.killed)

    @property
    def residual_ideal(self) -> Ideal:
        return Ideal(self.ring, self.residual)

    @property
    def residual_variables(self) -> List[str]:
        return [self.ring.variables[i] for i in occurring_variables(self.residual)]

    def residual_strings(self) -> List[str]:
        return [to_string(g) for g in self.residual]

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "killed": list(self.killed),
            "free": list(self.free),
            "substitutions": {v: to_string(p) for v, p in self.substitutions.items()},
            "residual": self.residual_strings(),
            "certified": self.certified,
            "kills_certified": self.kills_certified,
            "flag": str(self.flag),
            "rules_fired": dict(self.rules_fired),
        }
        if self.kill_certificates:
            data["kill_certificates"] = dict(self.kill_certificates)
        return data


def _drop_variable(poly: Polynomial, idx: int) -> Polynomial:
    """Подстановка v = 0: отбрасываются члены, содержащие v."""
    return poly.ring({m: c for m, c in poly.items() if not m[idx]})


def _squarefree(monom: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(1 if e else 0 for e in monom)


def _linear_candidate(g: Polynomial) -> Optional[Tuple[int, Polynomial]]:
    """
    Первая (в порядке кольца) переменная v, входящая в g ровно одним членом c·v;
    возвращает (индекс v, образ -остаток/c).
    """
    n = g.ring.ngens
    occurrences = [0] * n
    for monom in g.keys():
        for i, e in enumerate(monom):
            if e:
                occurrences[i] += 1
    for i in range(n):
        if occurrences[i] != 1:
            continue
        unit = tuple(1 if j == i else 0 for j in range(n))
        if unit in g:
            c = g[unit]
            rest = g.ring({m: coeff for m, coeff in g.items() if m != unit})
            return i, (-rest).quo_ground(c)
    return None


def _literal_power(gens: List[Polynomial], idx: int, cap: int) -> Optional[int]:
    """Показатель e, если среди образующих есть c·v^e с e <= cap."""
    exponents = [
        g.LM[idx] for g in gens
        if len(g) == 1 and g.LM[idx] and sum(1 for e in g.LM if e) == 1
    ]
    best = min(exponents, default=None)
    return best if best is not None and best <= cap else None


def _groebner_power(ideal: Ideal, idx: int, cap: int, budget: StepBudget) -> Optional[int]:
    v = ideal.ring.sympy_ring.gens[idx]
    gb = ideal.groebner(budget)
    power = v
    for e in range(1, cap + 1):
        if gb.contains(power, budget):
            return e
        power = power * v
    return None


def certify_kills(ideal: Ideal, names: List[str], cap: int, limit: int) -> Dict[str, Optional[int]]:
    """
    Сертификаты убийств: для переменной v показатель e с v^e ∈ I + (w_1, ..., w_k),
    где w_i уже подтверждены. Цепочка сертификатов даёт v ∈ √I.

    Сначала ищутся буквальные степени среди образующих (без базиса Грёбнера),
    затем оставшиеся проверяются нормальной формой. При исчерпании
    собственного бюджета оставшиеся сертификаты равны None.
    """
    ring = ideal.ring
    budget = StepBudget(limit, name="certify")
    certificates: Dict[str, Optional[int]] = {v: None for v in names}
    confirmed: List[int] = []
    ideals: Dict[Tuple[int, ...], Ideal] = {}

    def augmented(key: Tuple[int, ...]) -> Ideal:
        if key not in ideals:
            gens = list(ideal.generators)
            for i in key:
                gens = [_drop_variable(g, i) for g in gens]
            ideals[key] = Ideal(ring, tuple(g for g in gens if g)) if key else ideal
        return ideals[key]

    try:
        for use_groebner in (False, True):
            progress = True
            while progress:
                progress = False
                for v in names:
                    if certificates[v] is not None:
                        continue
                    idx = ring.variables.index(v)
                    current = augmented(tuple(sorted(confirmed)))
                    e = _literal_power(list(current.generators), idx, cap)
                    if e is None and use_groebner:
                        e = _groebner_power(current, idx, cap, budget)
                    if e is not None:
                        certificates[v] = e
                        confirmed.append(idx)
                        progress = True
    except BudgetExceededError as exc:
        LOG.warning("Подтверждение убийств прервано: %s", exc.message)
    return certificates


def heuristic_reduce(
    source: Union[ArcPresentation, Ideal],
    budget: Any = None,
    certify: bool = True,
    certify_cap: Optional[int] = None,
) -> ReducedPresentation:
    """
    Неподвижная точка правил редукции для идеала (или пространства дуг).
    По умолчанию каждое убийство подтверждается сертификатом v^e ∈ I;
    certify=False оставляет только структурный флаг.
    """
    ideal = source.ideal if isinstance(source, ArcPresentation) else source
    ring = ideal.ring
    counter = budget if isinstance(budget, StepBudget) else StepBudget(budget)
    gens_of = ring.sympy_ring.gens

    gens: List[Polynomial] = list(ideal.generators)
    killed: List[int] = []
    substitutions: Dict[int, Polynomial] = {}
    fired = {"squarefree": 0, "kill": 0, "substitution": 0}

    while True:
        gens = interreduce(gens, counter)

        # (2) одночлены -> бесквадратные части
        squarefree_changed = False
        updated: List[Polynomial] = []
        for g in gens:
            if len(g) == 1:
                monom = g.LM
                sq = _squarefree(monom)
                if sq != monom:
                    squarefree_changed = True
                    g = ring.sympy_ring({sq: ring.field.domain.one})
            updated.append(g)
        if squarefree_changed:
            fired["squarefree"] += 1
            gens = updated
            continue
        gens = updated

        # (3) чистые степени -> убиваем переменную
        to_kill = sorted({
            next(i for i, e in enumerate(g.LM) if e)
            for g in gens
            if len(g) == 1 and sum(1 for e in g.LM if e) == 1
        })
        if to_kill:
            for i in to_kill:
                killed.append(i)
                gens = [_drop_variable(g, i) for g in gens]
                substitutions = {w: _drop_variable(p, i) for w, p in substitutions.items()}
            gens = [g for g in gens if g]
            fired["kill"] += len(to_kill)
            LOG.debug("Убиты переменные %s", [ring.variables[i] for i in to_kill])
            continue

        # (4) линейная подстановка
        applied = False
        for g in gens:
            candidate = _linear_candidate(g)
            if candidate is None:
                continue
            i, image = candidate
            v = gens_of[i]
            gens = [h.compose(v, image) for h in gens if h != g]
            substitutions = {w: p.compose(v, image) for w, p in substitutions.items()}
            substitutions[i] = image
            fired["substitution"] += 1
            LOG.debug("Подстановка %s -> %s", ring.variables[i], to_string(image))
            applied = True
            break
        if not applied:
            break

    residual = tuple(gens)
    residual_vars = set(occurring_variables(residual))
    eliminated = set(killed) | set(substitutions)
    free = tuple(v for i, v in enumerate(ring.variables) if i not in eliminated and i not in residual_vars)

    structural = all(len(g) == 1 and max(g.LM) <= 1 for g in residual)
    certificates: Dict[str, Optional[int]] = {}
    if certify and killed:
        cap = int(certify_cap if certify_cap is not None else CERTIFY_MAX_EXPONENT)
        certificates = certify_kills(ideal, [ring.variables[i] for i in sorted(killed)], cap, counter.limit)
        if any(e is None for e in certificates.values()):
            LOG.warning("Не удалось подтвердить убийство переменных: %s",
                        [v for v, e in certificates.items() if e is None])
            structural = False
    flag = ReductionFlag.RADICAL_CERTIFIED if structural else ReductionFlag.HEURISTIC_FIXPOINT

    result = ReducedPresentation(
        ring=ring,
        killed=tuple(ring.variables[i] for i in sorted(killed)),
        substitutions={ring.variables[i]: p for i, p in sorted(substitutions.items())},
        free=free,
        residual=residual,
        flag=flag,
        kill_certificates=certificates,
        rules_fired=fired,
    )
    LOG.debug(
        "Редукция: убито %d, подстановок %d, свободных %d, остаток %d, флаг %s",
        len(result.killed), len(result.substitutions), len(free), len(residual), flag,
    )
    return result
