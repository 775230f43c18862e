# src/services/motive_service/motive_class.py
# coding: utf-8
"""
Классы в кольце Лорана Z[L, L^-1] (L — класс аффинной прямой).

Класс хранится как L^shift · p(L), где p — многочлен из ZZ[L] (кольцо sympy)
с ненулевым свободным членом; у нуля shift = 0.
"""

from __future__ import annotations
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import Integer, Pow, Symbol, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement, ring

from src.model.errors import NonUnitConstantError, ParseError

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

_ZZL, _L = ring("L", ZZ)
_SYMBOL = Symbol("L")

NEG_INF = float("-inf")


def _normalize(poly: PolyElement, shift: int) -> Tuple[PolyElement, int]:
    if not poly:
        return _ZZL.zero, 0
    low = min(m[0] for m in poly.keys())
    if low:
        poly = _ZZL({(m[0] - low,): c for m, c in poly.items()})
    return poly, shift + low


class MotiveClass:
    """Многочлен Лорана от L с целыми коэффициентами (неизменяемый)."""

    __slots__ = ("_poly", "_shift")

    def __init__(self, poly: Optional[PolyElement] = None, shift: int = 0):
        poly, shift = _normalize(_ZZL.zero if poly is None else poly, int(shift))
        self._poly = poly
        self._shift = shift

    # -------------------------
    # Конструкторы
    # -------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Mapping[int, int]) -> "MotiveClass":
        """Из словаря показатель -> коэффициент (показатели могут быть отрицательными)."""
        items = {int(e): int(c) for e, c in coeffs.items() if int(c)}
        if not items:
            return cls()
        low = min(items)
        return cls(_ZZL({(e - low,): ZZ(c) for e, c in items.items()}), low)

    @classmethod
    def zero(cls) -> "MotiveClass":
        return cls()

    @classmethod
    def one(cls) -> "MotiveClass":
        return cls(_ZZL.one)

    @classmethod
    def integer(cls, value: int) -> "MotiveClass":
        return cls.from_coeffs({0: value})

    @classmethod
    def lefschetz(cls, power: int = 1) -> "MotiveClass":
        """L^power."""
        return cls(_ZZL.one, power)

    @classmethod
    def coerce(cls, value: Union["MotiveClass", int, str]) -> "MotiveClass":
        if isinstance(value, MotiveClass):
            return value
        if isinstance(value, str):
            return cls.from_text(value)
        if isinstance(value, int):
            return cls.integer(value)
        raise ParseError(f"Не удаётся привести {value!r} к классу", details={"value": repr(value)})

    @classmethod
    def from_text(cls, text: str) -> "MotiveClass":
        """Разбор записи вида "3*L^2 - 2*L + L^-1"."""
        try:
            expr = sympify(str(text).replace("^", "**"), locals={"L": _SYMBOL}).expand()
        except (SympifyError, SyntaxError, TypeError) as exc:
            raise ParseError(f"Не удаётся разобрать класс {text!r}", details={"text": text}) from exc
        if expr.free_symbols - {_SYMBOL}:
            raise ParseError(f"Класс {text!r} содержит переменные кроме L", details={"text": text})
        coeffs: Dict[int, int] = {}
        for term, c in expr.as_coefficients_dict().items():
            if not isinstance(c, Integer):
                raise ParseError(f"Нецелый коэффициент в классе {text!r}", details={"text": text})
            if term == 1:
                e = 0
            elif term == _SYMBOL:
                e = 1
            elif isinstance(term, Pow) and term.base == _SYMBOL and term.exp.is_Integer:
                e = int(term.exp)
            else:
                raise ParseError(f"Член {term} не является степенью L", details={"text": text})
            coeffs[e] = coeffs.get(e, 0) + int(c)
        return cls.from_coeffs(coeffs)

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MotiveClass":
        try:
            return cls.from_coeffs({int(e): int(c) for e, c in data["L_coeffs"].items()})
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError("Некорректная JSON-запись класса", details={"data": data}) from exc

    # -------------------------
    # Доступ
    # -------------------------

    @property
    def coefficients(self) -> Dict[int, int]:
        return {m[0] + self._shift: int(c) for m, c in sorted(self._poly.items())}

    @property
    def is_zero(self) -> bool:
        return not self._poly

    @property
    def valuation(self) -> int:
        """Наименьший показатель; для нуля — 0."""
        return self._shift

    def dim(self) -> Union[int, float]:
        """Старший показатель L; -inf для нуля."""
        if self.is_zero:
            return NEG_INF
        return self._poly.degree() + self._shift

    def is_unit(self) -> bool:
        """Обратим в Z[L, L^-1] ровно вид ±L^a."""
        return len(self._poly) == 1 and abs(int(self._poly.LC)) == 1

    def inverse(self) -> "MotiveClass":
        if not self.is_unit():
            raise NonUnitConstantError(f"Класс {self} необратим", details={"class": str(self)})
        return MotiveClass(self._poly, -self._shift)

    def evaluate_at_q(self, q: int) -> Fraction:
        """Подстановка L = q (точно)."""
        base = Fraction(int(q))
        return sum((c * base ** e for e, c in self.coefficients.items()), Fraction(0))

    # -------------------------
    # Арифметика
    # -------------------------

    def _aligned(self, other: "MotiveClass") -> Tuple[PolyElement, PolyElement, int]:
        low = min(self._shift, other._shift)
        a = self._poly * _L ** (self._shift - low)
        b = other._poly * _L ** (other._shift - low)
        return a, b, low

    def __add__(self, other: Any) -> "MotiveClass":
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        a, b, low = self._aligned(other)
        return MotiveClass(a + b, low)

    __radd__ = __add__

    def __neg__(self) -> "MotiveClass":
        return MotiveClass(-self._poly, self._shift)

    def __sub__(self, other: Any) -> "MotiveClass":
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "MotiveClass":
        return (-self) + other

    def __mul__(self, other: Any) -> "MotiveClass":
        other = _coerce_operand(other)
        if other is NotImplemented:
            return other
        return MotiveClass(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MotiveClass":
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return MotiveClass(self._poly ** exponent, self._shift * exponent)

    def exact_divide(self, other: "MotiveClass") -> "MotiveClass":
        """Деление на обратимый класс ±L^a."""
        return self * other.inverse()

    def __eq__(self, other: Any) -> bool:
        other = _coerce_operand(other)
        if other is NotImplemented:
            return False
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self._shift, tuple(sorted(self._poly.items()))))

    def __bool__(self) -> bool:
        return not self.is_zero

    # -------------------------
    # Сериализация
    # -------------------------

    def to_json(self) -> Dict[str, Any]:
        return {"L_coeffs": {str(e): c for e, c in self.coefficients.items()}}

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in sorted(self.coefficients.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "L"
            else:
                mono = f"L^{e}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MotiveClass({self})"


def _coerce_operand(value: Any) -> Any:
    if isinstance(value, MotiveClass):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return MotiveClass.integer(value)
    return NotImplemented


L = MotiveClass.lefschetz()


def class_sum(classes: Iterable[MotiveClass]) -> MotiveClass:
    total = MotiveClass.zero()
    for c in classes:
        total = total + c
    return total


def affine_class(d: int) -> MotiveClass:
    """[A^d] = L^d."""
    return MotiveClass.lefschetz(d)
