# src/services/zeta_service/compare.py
# coding: utf-8
"""
Сверка вычисленного ряда с замкнутой формой: покоэффициентная разница,
вердикт и поиск сдвига вида computed_n = L^a · closed_(n-b) на хвосте.
"""

from __future__ import annotations
import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from src.services.motive_service.motive_class import MotiveClass
from src.services.motive_service.series import MotiveRational, MotiveSeries
from src.services.zeta_service.reference import ClosedForm

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

MAX_L_SHIFT = 12
MAX_T_SHIFT = 3


class Verdict(str, enum.Enum):
    MATCH = "match"
    TAIL_MATCH = "tail-match"
    SHIFT_MATCH = "shift-match"
    MISMATCH = "mismatch"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoefficientDiff:
    exponent: int
    computed: MotiveClass
    closed: MotiveClass

    @property
    def difference(self) -> MotiveClass:
        return self.computed - self.closed

    @property
    def match(self) -> bool:
        return self.difference.is_zero

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.exponent,
            "computed": str(self.computed),
            "closed": str(self.closed),
            "difference": str(self.difference),
            "match": self.match,
        }


@dataclass(frozen=True)
class SeriesShift:
    L_power: int
    t_power: int

    def to_json(self) -> Dict[str, int]:
        return {"L_power": self.L_power, "t_power": self.t_power}


@dataclass
class SeriesReport:
    name: str
    tail_from: int
    diffs: List[CoefficientDiff]
    shift: Optional[SeriesShift] = None
    notes: List[str] = field(default_factory=list)

    @property
    def mismatches(self) -> List[int]:
        return [d.exponent for d in self.diffs if not d.match]

    @property
    def verdict(self) -> Verdict:
        if not self.mismatches:
            return Verdict.MATCH
        if all(n < self.tail_from for n in self.mismatches):
            return Verdict.TAIL_MATCH
        if self.shift is not None:
            return Verdict.SHIFT_MATCH
        return Verdict.MISMATCH

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verdict": str(self.verdict),
            "tail_from": self.tail_from,
            "mismatches": self.mismatches,
            "shift": None if self.shift is None else self.shift.to_json(),
            "coefficients": [d.to_json() for d in self.diffs],
            "notes": list(self.notes),
        }


def _signed(limit: int) -> Iterator[int]:
    yield 0
    for k in range(1, limit + 1):
        yield k
        yield -k


def find_shift(
    series: MotiveSeries,
    closed: MotiveRational,
    tail_from: int = 0,
    max_L: int = MAX_L_SHIFT,
    max_t: int = MAX_T_SHIFT,
) -> Optional[SeriesShift]:
    """Первый (a, b) с computed_n = L^a · closed_(n-b) для всех n в [tail_from, T]; (0, 0) не считается."""
    expanded = closed.expand(series.T + max_t)
    zero = MotiveClass.zero()

    def closed_at(m: int) -> MotiveClass:
        return expanded.coeffs[m] if 0 <= m <= expanded.T else zero

    exponents = range(max(tail_from, 0), series.T + 1)
    for b in _signed(max_t):
        pairs: List[Tuple[MotiveClass, MotiveClass]] = [(series.coeffs[n], closed_at(n - b)) for n in exponents]
        if not any(not c.is_zero for c, _ in pairs):
            continue
        for a in _signed(max_L):
            if a == 0 and b == 0:
                continue
            factor = MotiveClass.lefschetz(a)
            if all(c == factor * r for c, r in pairs):
                LOG.info("Найден сдвиг: L^%d, t^%d", a, b)
                return SeriesShift(a, b)
    return None


def compare(
    series: MotiveSeries,
    closed: Union[ClosedForm, MotiveRational],
    tail_from: Optional[int] = None,
    name: Optional[str] = None,
) -> SeriesReport:
    """Сверка до t^T включительно."""
    if isinstance(closed, ClosedForm):
        rational = closed.rational
        tail = closed.tail_from if tail_from is None else tail_from
        label = name or closed.name
    else:
        rational = closed
        tail = tail_from or 0
        label = name or "closed"
    expanded = rational.expand(series.T)
    diffs = [CoefficientDiff(n, c, r) for n, (c, r) in enumerate(zip(series.coeffs, expanded.coeffs))]
    report = SeriesReport(name=label, tail_from=tail, diffs=diffs)
    if report.mismatches and any(n >= tail for n in report.mismatches):
        report.shift = find_shift(series, rational, tail)
        if report.shift is None:
            report.notes.append("сдвиг L^a t^b не найден")
    LOG.info("Сверка %s: %s (расхождения в %s)", label, report.verdict, report.mismatches)
    return report


def render_table(report: SeriesReport) -> str:
    """Таблица для --format text."""
    rows = [("n", "вычислено", "замкнутая форма", "")]
    rows += [(str(d.exponent), str(d.computed), str(d.closed), "ok" if d.match else "≠") for d in report.diffs]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = [f"{report.name}: {report.verdict}"]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    if report.shift is not None:
        lines.append(f"сдвиг: L^{report.shift.L_power} · t^{report.shift.t_power}")
    lines.extend(report.notes)
    return "\n".join(lines)
