# src/services/zeta_service/assembly.py
# coding: utf-8
"""
Сборка производящих рядов из пространств автодуг и дуг.

Класс уровня k: [A_k^red] = L^(аффинный ранг) · Π [фактор]; классы факторов
назначаются интерполяцией по подсчётам точек (на малых факторах разложения)
либо берутся из готового списка. Две нормировки коэффициента при t^n
(уровень k = n+1):
  definition: [A_k^red] · L^(-dim_p(X) · ℓ(J^k));
  codim:      [A_k^red] · L^(-dim A_k^red).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.model.errors import PreconditionError
from src.model.jobs import Budgets, ClassStrategy, Normalization, ZetaConfig
from src.services.algebra_service.ideal import Ideal, dimension
from src.services.arc_service.arcs import ArcPresentation, arc_space, auto_arc, jet
from src.services.arc_service.scheme import AffineScheme, preset
from src.services.motive_service.counting import count_points
from src.services.motive_service.interpolation import admissible_primes, interpolate_class
from src.services.motive_service.motive_class import L, MotiveClass
from src.services.motive_service.series import MotiveSeries
from src.services.reduction_service.decompose import Decomposition, decompose
from src.services.reduction_service.heuristic import ReducedPresentation, heuristic_reduce
from src.services.zeta_service.reference import printed_defect

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

# Подтверждение редукции подсчётом выполняется, если исходный идеал
# содержит не больше стольких переменных
CONFIRM_MAX_VARIABLES = 12
CONFIRM_MIN_PRIME = 5


@dataclass
class LevelResult:
    order: int
    length: int
    klass: MotiveClass
    dimension: int
    reduced: Optional[ReducedPresentation] = None
    decomposition: Optional[Decomposition] = None
    factor_classes: List[MotiveClass] = field(default_factory=list)
    certified: bool = False
    confirmed: Optional[bool] = None

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "order": self.order,
            "length": self.length,
            "class": str(self.klass),
            "dimension": self.dimension,
            "factor_classes": [str(c) for c in self.factor_classes],
            "certified": self.certified,
            "confirmed": self.confirmed,
        }
        if self.decomposition is not None:
            data["affine_rank"] = self.decomposition.affine_rank
        if self.reduced is not None:
            data["flag"] = str(self.reduced.flag)
        return data


@dataclass
class ZetaComputation:
    series: MotiveSeries
    normalization: Normalization
    local_dimension: int
    levels: List[LevelResult]

    def to_json(self) -> Dict[str, Any]:
        return {
            "normalization": str(self.normalization),
            "local_dimension": self.local_dimension,
            "series": self.series.to_json(),
            "coefficients": self.series.to_strings(),
            "levels": [level.to_json() for level in self.levels],
        }


@dataclass
class DefectReport:
    orders: List[int]
    dimensions: List[int]
    lengths: List[int]
    printed: Optional[Fraction] = None

    @property
    def ratios(self) -> List[Fraction]:
        return [Fraction(d, l) for d, l in zip(self.dimensions, self.lengths)]

    @property
    def estimate(self) -> Optional[Fraction]:
        return self.ratios[-1] if self.ratios else None

    @property
    def limit(self) -> Optional[Fraction]:
        """Наклон Δdim / Δℓ по двум последним порядкам: предел отношения при линейном росте."""
        if len(self.orders) < 2:
            return None
        step = self.lengths[-1] - self.lengths[-2]
        if step == 0:
            return None
        return Fraction(self.dimensions[-1] - self.dimensions[-2], step)

    @property
    def discrepancy(self) -> Optional[bool]:
        if self.printed is None or self.limit is None:
            return None
        return self.limit != self.printed

    def to_json(self) -> Dict[str, Any]:
        def text(value: Optional[Fraction]) -> Optional[str]:
            return None if value is None else str(value)

        return {
            "orders": self.orders,
            "dimensions": self.dimensions,
            "lengths": self.lengths,
            "ratios": [str(r) for r in self.ratios],
            "estimate": text(self.estimate),
            "limit": text(self.limit),
            "printed": text(self.printed),
            "discrepancy": self.discrepancy,
        }


def printed_defect_at(X: AffineScheme, point: Optional[Sequence[Any]]) -> Optional[Fraction]:
    """Напечатанный дефект; известен только в начале координат."""
    if point is not None and any(c != 0 for c in X.normalize_point(point)):
        return None
    return printed_defect(X.name)


# -------------------------
# Классы
# -------------------------

def excluded_primes(X: AffineScheme, strategy: ClassStrategy) -> Set[int]:
    return set(strategy.excluded_primes) | set(X.bad_characteristics)


def class_of_ideal(
    ideal: Ideal, strategy: ClassStrategy, excluded: Iterable[int], budgets: Budgets
) -> Tuple[MotiveClass, int]:
    """(класс, размерность) малого идеала; пустая схема даёт (0, -1)."""
    dim = dimension(ideal, budgets.groebner)
    if dim < 0:
        return MotiveClass.zero(), -1
    degree = dim if strategy.degree_bound is None else strategy.degree_bound
    klass = interpolate_class(
        ideal, degree, excluded,
        budget=budgets.points, start_prime=strategy.start_prime, workers=budgets.workers,
    )
    return klass, dim


def class_of_reduction(
    R: ReducedPresentation, strategy: ClassStrategy, excluded: Iterable[int], budgets: Budgets
) -> Tuple[MotiveClass, int, Decomposition, List[MotiveClass]]:
    decomposition = decompose(R)
    klass = MotiveClass.lefschetz(decomposition.affine_rank)
    dim = decomposition.affine_rank
    factor_classes = []
    for factor in decomposition.factors:
        c, d = class_of_ideal(factor, strategy, excluded, budgets)
        factor_classes.append(c)
        klass = klass * c
        dim = -1 if d < 0 or dim < 0 else dim + d
    return klass, dim, decomposition, factor_classes


def reduced_point_count(R: ReducedPresentation, p: int, budget: Optional[int] = None) -> int:
    """Число F_p-точек редуцированного представления (остаток и свободные переменные)."""
    eliminated = len(R.killed) + len(R.substitutions)
    return count_points(R.residual_ideal, p, budget=budget) // p ** eliminated


def confirm_reduction(
    ideal: Ideal,
    R: ReducedPresentation,
    excluded: Iterable[int] = (),
    budget: Optional[int] = None,
    start_prime: int = CONFIRM_MIN_PRIME,
) -> Optional[bool]:
    """Сравнение чисел F_p-точек до и после редукции; None, если перебор слишком велик."""
    if len(ideal.occurring_variables()) > CONFIRM_MAX_VARIABLES:
        return None
    p = next(admissible_primes(excluded, start_prime))
    before = count_points(ideal, p, budget=budget)
    after = reduced_point_count(R, p, budget)
    if before != after:
        LOG.error("Редукция не сохранила число F_%d-точек: %d != %d", p, before, after)
    return before == after


def checked_reduction(
    arc: ArcPresentation,
    order: int,
    strategy: ClassStrategy,
    budgets: Budgets,
    excluded: Iterable[int] = (),
) -> Tuple[ReducedPresentation, Optional[bool]]:
    """
    Редукция, пригодная для подсчёта классов.

    Уровень принимается, если все убийства подтверждены сертификатами v^e ∈ I
    либо редукция сохранила число F_p-точек. require_confirmed требует
    подсчёта и для сертифицированных уровней. Иначе PreconditionError.
    """
    R = heuristic_reduce(arc, budgets.groebner)
    certified = R.kills_certified
    confirmed: Optional[bool] = None
    if not certified or strategy.require_confirmed:
        confirmed = confirm_reduction(arc.ideal, R, excluded, budgets.points)

    reason = None
    if confirmed is False:
        reason = "редукция изменила число F_p-точек"
    elif confirmed is None and not certified:
        reason = "убийства не сертифицированы, подсчёт точек недоступен"
    elif confirmed is None and strategy.require_confirmed:
        reason = "подсчёт точек недоступен, а подтверждение обязательно"
    if reason is not None:
        raise PreconditionError(
            f"Редукция уровня {order} отклонена: {reason}",
            details={"order": order, "flag": str(R.flag), "certified": certified, "confirmed": confirmed},
        )
    return R, confirmed


def auto_arc_level(
    X: AffineScheme,
    point: Optional[Sequence[Any]],
    k: int,
    strategy: ClassStrategy,
    budgets: Budgets,
    excluded: Optional[Iterable[int]] = None,
) -> LevelResult:
    """Редукция, разложение и класс A_k(X, p)."""
    excluded = excluded_primes(X, strategy) if excluded is None else set(excluded)
    arc = auto_arc(X, point, k, budgets.groebner)
    R, confirmed = checked_reduction(arc, k, strategy, budgets, excluded)
    klass, dim, decomposition, factor_classes = class_of_reduction(R, strategy, excluded, budgets)
    LOG.debug("A_%d: класс %s, размерность %d", k, klass, dim)
    return LevelResult(
        order=k,
        length=arc.fat.length,
        klass=klass,
        dimension=dim,
        reduced=R,
        decomposition=decomposition,
        factor_classes=factor_classes,
        certified=R.kills_certified,
        confirmed=confirmed,
    )


def _supplied(strategy: ClassStrategy, N: int) -> List[MotiveClass]:
    classes = strategy.supplied_classes()
    if len(classes) < N + 1:
        raise PreconditionError(
            f"Нужно {N + 1} готовых классов, передано {len(classes)}",
            details={"required": N + 1, "supplied": len(classes)},
        )
    return classes[: N + 1]


def _class_dimension(c: MotiveClass) -> int:
    return -1 if c.is_zero else int(c.dim())


# -------------------------
# Ряды
# -------------------------

def compute_auto_zeta(
    X: AffineScheme,
    point: Optional[Sequence[Any]],
    N: int,
    normalization: Normalization = Normalization.DEFINITION,
    strategy: Optional[ClassStrategy] = None,
    budgets: Optional[Budgets] = None,
) -> ZetaComputation:
    """Редуцированный авто-ряд: коэффициент t^n — нормированный [A_{n+1}^red]."""
    if N < 1:
        raise PreconditionError("Порядок ряда должен быть >= 1", details={"N": N})
    strategy = strategy or ClassStrategy()
    budgets = budgets or Budgets()
    normalization = Normalization(normalization)
    excluded = excluded_primes(X, strategy)
    local_dim = X.dimension(budgets.groebner)
    supplied = _supplied(strategy, N) if strategy.kind == "supplied" else None

    levels: List[LevelResult] = []
    coeffs: List[MotiveClass] = []
    for n in range(N + 1):
        k = n + 1
        if supplied is not None:
            c = supplied[n]
            level = LevelResult(order=k, length=jet(X, point, k, budgets.groebner).length,
                                klass=c, dimension=_class_dimension(c))
        else:
            level = auto_arc_level(X, point, k, strategy, budgets, excluded)
        exponent = local_dim * level.length if normalization is Normalization.DEFINITION else level.dimension
        coeffs.append(level.klass * L ** (-exponent))
        levels.append(level)
    series = MotiveSeries(N, tuple(coeffs))
    LOG.info("Авто-ряд %s (%s): %s", X.name or "X", normalization, series.to_strings())
    return ZetaComputation(series=series, normalization=normalization, local_dimension=local_dim, levels=levels)


def auto_zeta(cfg: ZetaConfig) -> MotiveSeries:
    X = cfg.scheme.build()
    return compute_auto_zeta(X, cfg.scheme.point, cfg.order, cfg.normalization, cfg.strategy, cfg.budgets).series


def igusa_zeta(
    X: AffineScheme,
    Y: AffineScheme,
    q: Optional[Sequence[Any]],
    N: int,
    strategy: Optional[ClassStrategy] = None,
    budgets: Optional[Budgets] = None,
) -> ZetaComputation:
    """Ряд X вдоль струй гладкого ростка (Y, q): [∇_{J^{n+1}_q Y} X] · L^(-dim X · ℓ(J^{n+1}_q Y))."""
    strategy = strategy or ClassStrategy()
    budgets = budgets or Budgets()
    excluded = excluded_primes(X, strategy)
    dim_x = X.dimension(budgets.groebner)
    supplied = _supplied(strategy, N) if strategy.kind == "supplied" else None

    levels: List[LevelResult] = []
    coeffs: List[MotiveClass] = []
    for n in range(N + 1):
        J = jet(Y, q, n + 1, budgets.groebner)
        if supplied is not None:
            c = supplied[n]
            level = LevelResult(order=n + 1, length=J.length, klass=c, dimension=_class_dimension(c))
        else:
            arc = arc_space(X, J, budgets.groebner)
            R, confirmed = checked_reduction(arc, n + 1, strategy, budgets, excluded)
            klass, dim, decomposition, factor_classes = class_of_reduction(R, strategy, excluded, budgets)
            level = LevelResult(order=n + 1, length=J.length, klass=klass, dimension=dim, reduced=R,
                                decomposition=decomposition, factor_classes=factor_classes,
                                certified=R.kills_certified, confirmed=confirmed)
        coeffs.append(level.klass * L ** (-dim_x * level.length))
        levels.append(level)
    return ZetaComputation(
        series=MotiveSeries(N, tuple(coeffs)),
        normalization=Normalization.DEFINITION,
        local_dimension=dim_x,
        levels=levels,
    )


def igusa_theta(
    X: AffineScheme,
    N: int,
    strategy: Optional[ClassStrategy] = None,
    budgets: Optional[Budgets] = None,
) -> ZetaComputation:
    """Θ вдоль линейных струй: коэффициент t^n равен [∇_{l_{n+1}} X] · L^(-dim X · (n+1))."""
    line = preset("A1", X.ring.field)
    return igusa_zeta(X, line, None, N, strategy, budgets)


@dataclass
class AutoPoincare:
    series: MotiveSeries
    fiber_dimension: int
    integral: MotiveClass

    def to_json(self) -> Dict[str, Any]:
        return {
            "fiber_dimension": self.fiber_dimension,
            "series": self.series.to_json(),
            "coefficients": self.series.to_strings(),
            "value_at_L_inverse": str(self.integral),
        }


def auto_poincare(
    X: AffineScheme,
    point: Optional[Sequence[Any]],
    N: int,
    fiber_dim: int = 0,
    strategy: Optional[ClassStrategy] = None,
    budgets: Optional[Budgets] = None,
) -> AutoPoincare:
    """
    Ряд для тривиального гладкого семейства A^e × J: [π_{n+1}] = L^(e·ℓ)·[A_{n+1}^red],
    нормировка L^(-(e + dim_p X)·ℓ); плюс усечённое значение при t = L^-1.
    """
    if fiber_dim < 0:
        raise PreconditionError("Размерность слоя должна быть >= 0", details={"fiber_dim": fiber_dim})
    base = compute_auto_zeta(X, point, N, Normalization.DEFINITION, strategy, budgets)
    coeffs = []
    for level in base.levels:
        fibered = L ** (fiber_dim * level.length) * level.klass
        coeffs.append(fibered * L ** (-(fiber_dim + base.local_dimension) * level.length))
    series = MotiveSeries(N, tuple(coeffs))
    return AutoPoincare(series=series, fiber_dimension=fiber_dim, integral=series.evaluate_at_L_inverse())


def asymptotic_defect(
    X: AffineScheme,
    point: Optional[Sequence[Any]],
    N: int,
    budgets: Optional[Budgets] = None,
) -> DefectReport:
    """Отношения dim A_n^red / ℓ(J^n) для n = 2..N и сверка предела с напечатанным."""
    budgets = budgets or Budgets()
    strategy = ClassStrategy()
    orders, dims, lengths = [], [], []
    for n in range(2, N + 1):
        arc = auto_arc(X, point, n, budgets.groebner)
        R, _ = checked_reduction(arc, n, strategy, budgets, X.bad_characteristics)
        decomposition = decompose(R)
        dim = decomposition.affine_rank + sum(dimension(f, budgets.groebner) for f in decomposition.factors)
        orders.append(n)
        dims.append(dim)
        lengths.append(arc.fat.length)
        LOG.debug("Дефект: n=%d, dim=%d, ℓ=%d", n, dim, arc.fat.length)
    return DefectReport(orders=orders, dimensions=dims, lengths=lengths, printed=printed_defect_at(X, point))
