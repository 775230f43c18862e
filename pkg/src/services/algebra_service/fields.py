# src/services/algebra_service/fields.py
# coding: utf-8
"""
Поле коэффициентов: рациональные числа или простое поле F_p.

Арифметика делегируется доменам sympy (QQ и GF(p)); здесь только описание
поля, его текстовая форма ("QQ", "GF(5)") и каноническая печать коэффициентов.
Над F_p коэффициенты печатаются представителями 0..p-1.
"""

from __future__ import annotations
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ

from src.model.errors import ParseError, PreconditionError

_GF_RE = re.compile(r"^\s*(?:GF|F)\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class CoefficientField:
    """characteristic == 0 означает поле рациональных чисел."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p < 0 or (p > 0 and not isprime(p)):
            raise PreconditionError(
                f"Характеристика {p} не является простым числом",
                details={"characteristic": p},
            )

    # -------------------------
    # Конструкторы
    # -------------------------

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(int(p))

    @classmethod
    def from_text(cls, text: str) -> "CoefficientField":
        """Разбирает "QQ" / "Q" или "GF(p)"."""
        raw = (text or "").strip()
        if raw.upper() in ("QQ", "Q", "RATIONALS"):
            return cls.rationals()
        m = _GF_RE.match(raw)
        if not m:
            raise ParseError(f"Неизвестное поле коэффициентов: {text!r}", details={"field": text})
        try:
            return cls.prime(int(m.group(1)))
        except PreconditionError as exc:
            raise ParseError(exc.message, details=exc.details) from exc

    # -------------------------
    # Свойства
    # -------------------------

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0

    @cached_property
    def domain(self) -> Any:
        """Домен sympy, в котором живут коэффициенты."""
        return GF(self.characteristic) if self.is_prime_field else QQ

    def to_text(self) -> str:
        return f"GF({self.characteristic})" if self.is_prime_field else "QQ"

    def __str__(self) -> str:
        return self.to_text()

    # -------------------------
    # Коэффициенты
    # -------------------------

    def convert(self, value: Any) -> Any:
        """Переводит int / Fraction / элемент домена в элемент домена поля."""
        dom = self.domain
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if self.is_prime_field and den % self.characteristic == 0:
                raise PreconditionError(
                    f"Знаменатель {den} не обратим в {self.to_text()}",
                    details={"value": str(value)},
                )
            return dom.convert(num) / dom.convert(den) if den != 1 else dom.convert(num)
        return dom.convert(value)

    def as_fraction(self, coeff: Any) -> Fraction:
        """Коэффициент как Fraction; над F_p — представитель 0..p-1."""
        if self.is_prime_field:
            return Fraction(int(coeff) % self.characteristic)
        return Fraction(int(QQ.numer(coeff)), int(QQ.denom(coeff)))

    def format_coefficient(self, coeff: Any) -> str:
        value = self.as_fraction(coeff)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
