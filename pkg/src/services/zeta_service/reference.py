# src/services/zeta_service/reference.py
# coding: utf-8
"""
Опорные данные для рядов: напечатанные замкнутые формы, формулы классов
пространств дуг узла и каспа и структурные классы редуцированных автодуг.

Напечатанные формы хранятся как есть (включая возможные опечатки); сверка
с вычисленными рядами выполняется в compare.py.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional

from src.model.errors import ParseError, PreconditionError
from src.services.motive_service.motive_class import L, MotiveClass
from src.services.motive_service.series import MotiveRational, MotiveSeries

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class ClosedForm:
    name: str
    rational: MotiveRational
    # с какого показателя сравнивать «хвост»
    tail_from: int
    description: str

    def to_json(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "tail_from": self.tail_from,
            "description": self.description,
            **self.rational.to_strings(),
        }


def _cubed(factor):
    return [factor, factor, factor]


PRINTED: Dict[str, ClosedForm] = {
    form.name: form
    for form in (
        ClosedForm(
            "theta_cusp",
            MotiveRational.from_factors(
                [L, L - 1, 0, 0, 0, L ** 2 - L, L ** 2],
                [[1, 0, 0, 0, 0, 0, -L], [1, -1]],
            ),
            0,
            "Θ каспа вдоль линейных струй",
        ),
        ClosedForm(
            "theta_cusp_even",
            MotiveRational.from_factors(
                [L, 0, L - 1, 0, 0, 0, 2 * L ** 2 - L],
                [[1, 0, 0, 0, 0, 0, -L], [1, 0, -1]],
            ),
            0,
            "чётная часть Θ каспа",
        ),
        ClosedForm(
            "zeta_cusp",
            MotiveRational.from_factors(
                [1, 0, 0, -(L + 1), L, L - 1, 2 * L ** 2],
                [[1, 0, 0, -L], [1, -1]],
            ),
            4,
            "редуцированный авто-ряд каспа в начале координат",
        ),
        ClosedForm(
            "theta_node_squared",
            MotiveRational.from_factors(
                [2 * L ** 2 - 4 * L + 3, -(L ** 2) * (L ** 2 + 1), L ** 4],
                _cubed([1, -(L ** 2)]),
            ),
            0,
            "Θ квадрата узла",
        ),
        ClosedForm(
            "zeta_node",
            MotiveRational.from_factors(
                [1, -(L ** 2 + 4 * L - 3), L ** 2 * (2 * L ** 2 - 1), -(L ** 4) * (3 * L ** 2 - 1)],
                _cubed([1, -(L ** 2)]),
            ),
            3,
            "редуцированный авто-ряд узла в начале координат",
        ),
    )
}


def printed_form(name: str) -> ClosedForm:
    try:
        return PRINTED[name]
    except KeyError:
        raise ParseError(
            f"Неизвестная замкнутая форма: {name!r}",
            details={"name": name, "available": sorted(PRINTED)},
        ) from None


# Напечатанный асимптотический дефект в начале координат
PRINTED_DEFECTS: Dict[str, Fraction] = {
    "node": Fraction(1),
    "cusp": Fraction(2),
    "cusp+": Fraction(2),
}


def printed_defect(name: Optional[str]) -> Optional[Fraction]:
    return PRINTED_DEFECTS.get(name or "")


# -------------------------
# Классы пространств дуг
# -------------------------

def node_arc_class(m: int) -> MotiveClass:
    """[∇_{l_m} N] = (m+1)L^m - m·L^(m-1)."""
    if m < 1:
        raise PreconditionError("Длина линейной струи должна быть >= 1", details={"m": m})
    return (m + 1) * L ** m - m * L ** (m - 1)


def cusp_arc_class(m: int) -> MotiveClass:
    """[∇_{l_m} C] = Σ_{0<=k<m/6} (L-1)L^(m+k-1) + L^(2m-⌈m/3⌉-⌈m/2⌉)."""
    if m < 1:
        raise PreconditionError("Длина линейной струи должна быть >= 1", details={"m": m})
    total = L ** (2 * m - ceil(m / 3) - ceil(m / 2))
    k = 0
    while 6 * k < m:
        total = total + (L - 1) * L ** (m + k - 1)
        k += 1
    return total


ARC_CLASS_FORMULAS = {"node": node_arc_class, "cusp": cusp_arc_class}


def structural_classes(curve: str, N: int) -> List[MotiveClass]:
    """
    [A_k^red] для k = 1..N+1 (элемент n соответствует t^n):
      касп: 1, L^4, L^7, затем L^7·[∇_{l_{2(k-3)}} C];
      узел: 1, L^4, затем L^4·[∇_{l_{k-2}} N]^2.
    """
    if curve not in ARC_CLASS_FORMULAS:
        raise ParseError(f"Структурные классы известны только для {sorted(ARC_CLASS_FORMULAS)}", details={"curve": curve})
    classes: List[MotiveClass] = []
    for k in range(1, N + 2):
        if k == 1:
            classes.append(MotiveClass.one())
        elif k == 2:
            classes.append(L ** 4)
        elif curve == "cusp":
            classes.append(L ** 7 if k == 3 else L ** 7 * cusp_arc_class(2 * (k - 3)))
        else:
            classes.append(L ** 4 * node_arc_class(k - 2) ** 2)
    return classes


def theta_from_classes(classes: List[MotiveClass], dim: int) -> MotiveSeries:
    """Σ c_n·L^(-dim·(n+1)) t^n."""
    coeffs = [c * L ** (-dim * (n + 1)) for n, c in enumerate(classes)]
    return MotiveSeries(len(coeffs) - 1, tuple(coeffs))


def recomputed_theta(curve: str, N: int) -> MotiveSeries:
    """Θ кривой вдоль линейных струй по формуле классов."""
    formula = ARC_CLASS_FORMULAS[curve]
    return theta_from_classes([formula(n + 1) for n in range(N + 1)], 1)


def recomputed_theta_node_squared(N: int) -> MotiveSeries:
    """Θ квадрата узла: коэффициенты [∇_{l_{n+1}} N]^2 · L^(-2(n+1))."""
    return theta_from_classes([node_arc_class(n + 1) ** 2 for n in range(N + 1)], 2)
