# src/services/algebra_service/parser.py
# coding: utf-8
"""
Разбор многочленов по фиксированной грамматике:

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' natural)?
    base     := rational | variable | '(' expr ')'
    rational := integer ('/' positive-integer)?

Пробелы незначимы, неявного умножения нет. Дополнительно допускается знак
перед первым членом выражения ("-x^3 + y^2"): так выглядит каноническая
печать многочленов с отрицательным старшим коэффициентом.
"""

from __future__ import annotations
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from src.model.errors import ParseError, PreconditionError
from src.services.algebra_service.polynomial import MAX_EXPONENT, PolyRing, Polynomial

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(
                f"Недопустимый символ в позиции {pos}: {text[pos:pos + 10]!r}",
                details={"text": text, "position": pos},
            )
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    # -------------------------
    # Навигация по токенам
    # -------------------------

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> _Token:
        tok = self._peek()
        if tok is None:
            self._fail("Неожиданный конец выражения", len(self.text))
        self.pos += 1
        return tok

    def _accept(self, op: str) -> bool:
        tok = self._peek()
        if tok is not None and tok.kind == "op" and tok.text == op:
            self.pos += 1
            return True
        return False

    def _fail(self, message: str, position: int) -> None:
        raise ParseError(message, details={"text": self.text, "position": position})

    # -------------------------
    # Правила грамматики
    # -------------------------

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._fail("Пустое выражение", 0)
        result = self._expr()
        tok = self._peek()
        if tok is not None:
            self._fail(f"Лишний токен {tok.text!r}", tok.pos)
        return result

    def _expr(self) -> Polynomial:
        negate = False
        if self._accept("-"):
            negate = True
        elif self._accept("+"):
            pass
        acc = self._term()
        if negate:
            acc = -acc
        while True:
            if self._accept("+"):
                acc = acc + self._term()
            elif self._accept("-"):
                acc = acc - self._term()
            else:
                return acc

    def _term(self) -> Polynomial:
        acc = self._factor()
        while self._accept("*"):
            acc = acc * self._factor()
        return acc

    def _factor(self) -> Polynomial:
        base = self._base()
        if self._accept("^"):
            tok = self._take()
            if tok.kind == "op" and tok.text == "-":
                self._fail("Отрицательный показатель степени", tok.pos)
            if tok.kind != "num":
                self._fail(f"Ожидался натуральный показатель, получено {tok.text!r}", tok.pos)
            exponent = int(tok.text)
            if exponent > MAX_EXPONENT:
                self._fail("Показатель степени вне машинного диапазона", tok.pos)
            return base ** exponent if exponent else self.ring.one
        return base

    def _base(self) -> Polynomial:
        tok = self._take()
        if tok.kind == "num":
            value = Fraction(int(tok.text))
            if self._accept("/"):
                den = self._take()
                if den.kind != "num" or int(den.text) == 0:
                    self._fail("Ожидался положительный знаменатель", den.pos)
                value = Fraction(int(tok.text), int(den.text))
            try:
                return self.ring.constant(value)
            except PreconditionError as exc:
                raise ParseError(exc.message, details={"text": self.text, "position": tok.pos}) from exc
        if tok.kind == "name":
            if tok.text not in self.ring.variables:
                raise ParseError(
                    f"Неизвестный идентификатор {tok.text!r}",
                    details={"text": self.text, "position": tok.pos, "variable": tok.text},
                )
            return self.ring.gen(tok.text)
        if tok.kind == "op" and tok.text == "(":
            inner = self._expr()
            if not self._accept(")"):
                self._fail("Ожидалась закрывающая скобка", tok.pos)
            return inner
        self._fail(f"Неожиданный токен {tok.text!r}", tok.pos)
        raise AssertionError("unreachable")


def parse(text: str, ring: PolyRing) -> Polynomial:
    """Разбирает выражение в многочлен кольца ring."""
    if not isinstance(text, str):
        raise ParseError("Ожидалась строка с многочленом", details={"value": repr(text)})
    return _Parser(text, ring).parse()


def parse_many(texts, ring: PolyRing) -> List[Polynomial]:
    return [parse(t, ring) for t in texts]
