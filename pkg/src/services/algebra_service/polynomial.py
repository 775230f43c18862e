# src/services/algebra_service/polynomial.py
# coding: utf-8
"""
Кольца многочленов и точная арифметика.

Многочлен — это элемент ``sympy.polys.rings.PolyElement`` (разреженный словарь
моном -> коэффициент, нулевые коэффициенты не хранятся). ``PolyRing`` описывает
кольцо (поле, упорядоченный список переменных, мономиальный порядок) и лениво
строит соответствующее кольцо sympy. Два равных описания дают равные кольца sympy,
поэтому элементы из них совместимы.

Каноническая сериализация: члены по убыванию в порядке кольца, коэффициенты
``p/q`` или целые, степени через ``^``, явное ``*``.
"""

from __future__ import annotations
import enum
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing as SympyPolyRing

from src.model.errors import ParseError, PreconditionError, RingMismatchError
from src.services.algebra_service.fields import CoefficientField

LOG = logging.getLogger(__name__)
LOG.addHandler(logging.NullHandler())

Polynomial = PolyElement
Monomial = Tuple[int, ...]

VARIABLE_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

# Показатели — машинные натуральные числа
MAX_EXPONENT = 2 ** 31 - 1


class MonomialOrder(str, enum.Enum):
    DEGREVLEX = "degrevlex"
    LEX = "lex"

    def __str__(self) -> str:
        return self.value

    @property
    def sympy_order(self) -> Any:
        return grevlex if self is MonomialOrder.DEGREVLEX else lex


@dataclass(frozen=True)
class PolyRing:
    """Кольцо k[x_1, ..., x_n] с фиксированным мономиальным порядком."""

    field: CoefficientField
    variables: Tuple[str, ...]
    order: MonomialOrder = MonomialOrder.DEGREVLEX

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "order", MonomialOrder(self.order))
        seen = set()
        for name in self.variables:
            if not VARIABLE_RE.match(name):
                raise ParseError(f"Недопустимое имя переменной: {name!r}", details={"variable": name})
            if name in seen:
                raise ParseError(f"Переменная {name!r} объявлена дважды", details={"variable": name})
            seen.add(name)

    @cached_property
    def sympy_ring(self) -> SympyPolyRing:
        symbols = tuple(Symbol(v) for v in self.variables)
        return SympyPolyRing(symbols, self.field.domain, self.order.sympy_order)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    # -------------------------
    # Элементы
    # -------------------------

    @property
    def ngens(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> Polynomial:
        return self.sympy_ring.zero

    @property
    def one(self) -> Polynomial:
        return self.sympy_ring.one

    def gen(self, name: str) -> Polynomial:
        return self.sympy_ring.gens[self.index(name)]

    def gens(self) -> Dict[str, Polynomial]:
        return dict(zip(self.variables, self.sympy_ring.gens))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"Переменная {name!r} не принадлежит кольцу", details={"variable": name}) from None

    def constant(self, value: Any) -> Polynomial:
        return self.sympy_ring.ground_new(self.field.convert(value))

    def monomial(self, exponents: Sequence[int]) -> Polynomial:
        return self.sympy_ring({tuple(exponents): self.field.domain.one})

    def from_terms(self, terms: Mapping[Monomial, Any]) -> Polynomial:
        """Многочлен из словаря моном -> коэффициент (int, Fraction, элемент домена)."""
        poly = self.sympy_ring.zero
        for monom, coeff in terms.items():
            c = self.field.convert(coeff)
            if c:
                poly[tuple(monom)] = c
        return poly

    def contains(self, poly: Polynomial) -> bool:
        return isinstance(poly, PolyElement) and poly.ring == self.sympy_ring

    def order_key(self, monom: Monomial) -> Any:
        return self.sympy_ring.order(monom)

    def parse(self, text: str) -> Polynomial:
        from src.services.algebra_service.parser import parse
        return parse(text, self)

    def renamed(self, variables: Sequence[str]) -> "PolyRing":
        return PolyRing(self.field, tuple(variables), self.order)

    def to_dict(self) -> Dict[str, Any]:
        return {"field": self.field.to_text(), "variables": list(self.variables), "order": str(self.order)}


def ring_of(poly: Polynomial) -> PolyRing:
    """Восстанавливает описание кольца по элементу sympy."""
    sring = poly.ring
    dom = sring.domain
    char = int(dom.characteristic()) if dom.is_FiniteField else 0
    order = MonomialOrder.LEX if sring.order == lex else MonomialOrder.DEGREVLEX
    return PolyRing(CoefficientField(char), tuple(str(s) for s in sring.symbols), order)


def check_same_ring(*polys: Polynomial) -> None:
    if not polys:
        return
    first = polys[0].ring
    for p in polys[1:]:
        if p.ring != first:
            raise RingMismatchError(
                "Многочлены принадлежат разным кольцам",
                details={"left": [str(s) for s in first.symbols], "right": [str(s) for s in p.ring.symbols]},
            )


# -------------------------
# Арифметика
# -------------------------

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    check_same_ring(a, b)
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    check_same_ring(a, b)
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    check_same_ring(a, b)
    return a * b


def power(a: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise PreconditionError("Отрицательная степень многочлена", details={"exponent": n})
    if n > MAX_EXPONENT:
        raise PreconditionError("Показатель степени вне машинного диапазона", details={"exponent": n})
    if n == 0:
        return a.ring.one
    return a ** n


def terms(poly: Polynomial) -> Dict[Monomial, Any]:
    return dict(poly.items())


def occurring_variables(polys: Iterable[Polynomial]) -> List[int]:
    """Индексы переменных, реально входящих в многочлены."""
    seen = set()
    for p in polys:
        for monom in p.keys():
            seen.update(i for i, e in enumerate(monom) if e)
    return sorted(seen)


def is_monomial_term(poly: Polynomial) -> bool:
    return len(poly) == 1


def evaluate(poly: Polynomial, point: Sequence[Any]) -> Any:
    """Значение в точке (координаты — элементы домена или int / Fraction)."""
    ring = ring_of(poly)
    values = [ring.field.convert(v) for v in point]
    dom = ring.field.domain
    total = dom.zero
    for monom, coeff in poly.items():
        term = coeff
        for v, e in zip(values, monom):
            if e:
                term = term * v ** e
        total += term
    return total


def substitute(poly: Polynomial, mapping: Mapping[str, Polynomial]) -> Polynomial:
    """
    Подставляет вместо переменных многочлены из одного целевого кольца.
    Каждая переменная, входящая в poly, должна иметь образ.
    """
    source = ring_of(poly)
    images = list(mapping.values())
    if not images:
        if any(any(m) for m in poly.keys()):
            raise PreconditionError("Нет образов для переменных многочлена")
        return poly
    check_same_ring(*images)
    target = images[0].ring
    for idx in occurring_variables([poly]):
        name = source.variables[idx]
        if name not in mapping:
            raise PreconditionError(f"Нет образа для переменной {name!r}", details={"variable": name})

    powers: Dict[Tuple[int, int], Polynomial] = {}

    def _pow(idx: int, e: int) -> Polynomial:
        key = (idx, e)
        if key not in powers:
            powers[key] = mapping[source.variables[idx]] ** e
        return powers[key]

    result = target.zero
    convert = target.domain.convert_from
    for monom, coeff in poly.items():
        term = target.ground_new(convert(coeff, poly.ring.domain))
        for idx, e in enumerate(monom):
            if e:
                term = term * _pow(idx, e)
        result += term
    return result


def rename_into(poly: Polynomial, target: PolyRing, mapping: Optional[Mapping[str, str]] = None) -> Polynomial:
    """Переносит многочлен в кольцо target, переименовывая переменные по mapping."""
    source = ring_of(poly)
    mapping = mapping or {}
    positions = []
    for idx in occurring_variables([poly]):
        name = source.variables[idx]
        positions.append((idx, target.index(mapping.get(name, name))))
    result = target.zero
    convert = target.field.domain.convert_from
    for monom, coeff in poly.items():
        exps = [0] * target.ngens
        for src, dst in positions:
            exps[dst] += monom[src]
        result[tuple(exps)] = convert(coeff, poly.ring.domain)
    return result


# -------------------------
# Сериализация
# -------------------------

def format_monomial(variables: Sequence[str], monom: Monomial) -> str:
    parts = []
    for name, e in zip(variables, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def to_string(poly: Polynomial) -> str:
    """Каноническая строка: члены по убыванию порядка кольца."""
    if not poly:
        return "0"
    ring = ring_of(poly)
    chunks: List[str] = []
    for monom, coeff in poly.terms():
        value = ring.field.as_fraction(coeff)
        negative = value < 0
        magnitude = -value if negative else value
        mono = format_monomial(ring.variables, monom)
        if not mono:
            body = ring.field.format_coefficient(coeff).lstrip("-")
        elif magnitude == 1:
            body = mono
        else:
            num = str(magnitude.numerator) if magnitude.denominator == 1 else f"{magnitude.numerator}/{magnitude.denominator}"
            body = f"{num}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f" - {body}" if negative else f" + {body}")
    return "".join(chunks)
