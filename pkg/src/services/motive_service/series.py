# src/services/motive_service/series.py
# coding: utf-8
"""
Усечённые степенные ряды и рациональные функции с коэффициентами-классами.

MotiveSeries хранит коэффициенты при t^0..t^T; арифметика никогда не читает
дальше T. Сумма и произведение рядов разной длины имеют T = min;
увеличить T нельзя (TruncationError). MotiveRational — пара многочленов от t
(списки классов по степеням t) со свободным членом знаменателя вида ±L^a.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.model.errors import NonUnitConstantError, ParseError, PreconditionError, TruncationError
from src.services.motive_service.motive_class import MotiveClass

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

ClassLike = Union[MotiveClass, int, str]
TPolynomial = Tuple[MotiveClass, ...]


def _classes(values: Iterable[ClassLike]) -> Tuple[MotiveClass, ...]:
    return tuple(MotiveClass.coerce(v) for v in values)


def _strip(poly: Sequence[MotiveClass]) -> TPolynomial:
    items = list(poly)
    while items and items[-1].is_zero:
        items.pop()
    return tuple(items)


def poly_mul(a: Sequence[MotiveClass], b: Sequence[MotiveClass]) -> TPolynomial:
    """Произведение многочленов от t."""
    if not a or not b:
        return ()
    out = [MotiveClass.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _strip(out)


def poly_add(a: Sequence[MotiveClass], b: Sequence[MotiveClass]) -> TPolynomial:
    size = max(len(a), len(b))
    zero = MotiveClass.zero()
    return _strip([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(size)])


def poly_product(factors: Iterable[Sequence[ClassLike]]) -> TPolynomial:
    result: TPolynomial = (MotiveClass.one(),)
    for f in factors:
        result = poly_mul(result, _classes(f))
    return result


def poly_to_strings(poly: Sequence[MotiveClass]) -> List[str]:
    return [str(c) for c in poly]


# -------------------------
# Ряды
# -------------------------

@dataclass(frozen=True)
class MotiveSeries:
    T: int
    coeffs: Tuple[MotiveClass, ...]

    def __post_init__(self) -> None:
        if self.T < 0:
            raise TruncationError("Порядок усечения должен быть >= 0", details={"T": self.T})
        coeffs = _classes(self.coeffs)
        if len(coeffs) > self.T + 1:
            coeffs = coeffs[: self.T + 1]
        coeffs = coeffs + (MotiveClass.zero(),) * (self.T + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    # -------------------------
    # Конструкторы
    # -------------------------

    @classmethod
    def from_classes(cls, coeffs: Sequence[ClassLike], T: Optional[int] = None) -> "MotiveSeries":
        return cls(len(coeffs) - 1 if T is None else T, _classes(coeffs))

    @classmethod
    def geometric(cls, ratio: ClassLike, T: int, scale: ClassLike = 1) -> "MotiveSeries":
        """scale · Σ ratio^n t^n."""
        r, c = MotiveClass.coerce(ratio), MotiveClass.coerce(scale)
        coeffs, term = [], c
        for _ in range(T + 1):
            coeffs.append(term)
            term = term * r
        return cls(T, tuple(coeffs))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MotiveSeries":
        try:
            return cls(int(data["T"]), tuple(MotiveClass.from_json(c) for c in data["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("Некорректная JSON-запись ряда", details={"data": data}) from exc

    # -------------------------
    # Арифметика
    # -------------------------

    def coefficient(self, n: int) -> MotiveClass:
        if n < 0 or n > self.T:
            raise TruncationError(f"Коэффициент t^{n} вне усечения T={self.T}", details={"n": n, "T": self.T})
        return self.coeffs[n]

    def truncate(self, T: int) -> "MotiveSeries":
        if T > self.T:
            raise TruncationError("Нельзя увеличить порядок усечения", details={"T": self.T, "requested": T})
        return MotiveSeries(T, self.coeffs[: T + 1])

    def __add__(self, other: "MotiveSeries") -> "MotiveSeries":
        """Сумма усекается до min(T): старшие коэффициенты более длинного ряда отбрасываются."""
        T = min(self.T, other.T)
        return MotiveSeries(T, tuple(a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs[: T + 1])))

    def __neg__(self) -> "MotiveSeries":
        return MotiveSeries(self.T, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "MotiveSeries") -> "MotiveSeries":
        return self + (-other)

    def __mul__(self, other: Union["MotiveSeries", ClassLike]) -> "MotiveSeries":
        """Произведение рядов усекается до min(T), как и сумма; скаляр сохраняет T."""
        if not isinstance(other, MotiveSeries):
            return self.scale(other)
        T = min(self.T, other.T)
        out = [MotiveClass.zero()] * (T + 1)
        for i in range(T + 1):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(T + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return MotiveSeries(T, tuple(out))

    def __rmul__(self, other: ClassLike) -> "MotiveSeries":
        return self.scale(other)

    def scale(self, factor: ClassLike) -> "MotiveSeries":
        c = MotiveClass.coerce(factor)
        return MotiveSeries(self.T, tuple(c * a for a in self.coeffs))

    def substitute_t_power(self, r: int) -> "MotiveSeries":
        """t -> t^r; порядок усечения умножается на r."""
        if r < 1:
            raise PreconditionError("Показатель подстановки должен быть >= 1", details={"r": r})
        out = [MotiveClass.zero()] * (self.T * r + 1)
        for n, c in enumerate(self.coeffs):
            out[n * r] = c
        return MotiveSeries(self.T * r, tuple(out))

    def star_filter(self, q: int, offset: int = 0) -> "MotiveSeries":
        """Оставляет члены с показателем ≡ offset (mod q)."""
        if q < 1:
            raise PreconditionError("Модуль фильтра должен быть >= 1", details={"q": q})
        zero = MotiveClass.zero()
        return MotiveSeries(self.T, tuple(c if n % q == offset % q else zero for n, c in enumerate(self.coeffs)))

    def evaluate_at_L_inverse(self) -> MotiveClass:
        """Усечённое значение при t = L^-1."""
        total = MotiveClass.zero()
        for n, c in enumerate(self.coeffs):
            if not c.is_zero:
                total = total + c * MotiveClass.lefschetz(-n)
        return total

    def shifted(self, L_power: int = 0, t_power: int = 0) -> "MotiveSeries":
        """L^a · t^b · S (с тем же T)."""
        zero = MotiveClass.zero()
        factor = MotiveClass.lefschetz(L_power)
        out = [zero] * (self.T + 1)
        for n, c in enumerate(self.coeffs):
            m = n + t_power
            if 0 <= m <= self.T:
                out[m] = c * factor
        return MotiveSeries(self.T, tuple(out))

    # -------------------------
    # Сериализация
    # -------------------------

    def to_json(self) -> Dict[str, Any]:
        return {"T": self.T, "coeffs": [c.to_json() for c in self.coeffs]}

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = [f"({c})*t^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero]
        return (" + ".join(terms) or "0") + f" + O(t^{self.T + 1})"


# -------------------------
# Рациональные функции
# -------------------------

@dataclass(frozen=True)
class MotiveRational:
    num: TPolynomial
    den: TPolynomial

    def __post_init__(self) -> None:
        num, den = _strip(_classes(self.num)), _strip(_classes(self.den))
        if not den or not den[0].is_unit():
            raise NonUnitConstantError(
                "Свободный член знаменателя должен иметь вид ±L^a",
                details={"den": poly_to_strings(den)},
            )
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_factors(cls, num: Sequence[ClassLike], den_factors: Iterable[Sequence[ClassLike]]) -> "MotiveRational":
        """Числитель и знаменатель как произведение множителей-многочленов от t."""
        return cls(_classes(num), poly_product(den_factors))

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MotiveRational":
        try:
            return cls(
                tuple(MotiveClass.from_json(c) for c in data["num"]),
                tuple(MotiveClass.from_json(c) for c in data["den"]),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError("Некорректная JSON-запись рациональной функции", details={"data": data}) from exc

    def expand(self, T: int) -> MotiveSeries:
        return expand_rational(self, T)

    def to_json(self) -> Dict[str, Any]:
        return {"num": [c.to_json() for c in self.num], "den": [c.to_json() for c in self.den]}

    def to_strings(self) -> Dict[str, List[str]]:
        return {"num": poly_to_strings(self.num), "den": poly_to_strings(self.den)}


def expand_rational(R: MotiveRational, T: int) -> MotiveSeries:
    """Единственный ряд S с S·den ≡ num (mod t^{T+1})."""
    if T < 0:
        raise TruncationError("Порядок усечения должен быть >= 0", details={"T": T})
    inv = R.den[0].inverse()
    zero = MotiveClass.zero()
    out: List[MotiveClass] = []
    for n in range(T + 1):
        acc = R.num[n] if n < len(R.num) else zero
        for k in range(1, min(n, len(R.den) - 1) + 1):
            acc = acc - R.den[k] * out[n - k]
        out.append(acc * inv)
    return MotiveSeries(T, tuple(out))
