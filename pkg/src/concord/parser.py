"""Recursive-descent parser for knot expressions.

Grammar (whitespace is insignificant, ``#`` is left-associative)::

    expr    := term ("#" term)*
    term    := "U"
             | "T(" int "," int ")"
             | "m(" expr ")" | "r(" expr ")"
             | "Wh+(" expr "," int ")"
             | "D(" expr "," int "," expr "," int ")"
             | "seifert(" matrix ["," "alt"] ")"
             | "(" expr ")"
    matrix  := "[" row ("," row)* "]"
    row     := "[" int ("," int)* "]"
"""

from __future__ import annotations

import re

from .knots import (
    GenDouble,
    InvalidKnotError,
    KnotExpr,
    Mirror,
    RawSeifert,
    Reverse,
    Sum,
    Torus,
    Unknot,
    WhiteheadPos,
)
from .matrix import IntMatrix

__all__ = ["KnotSyntaxError", "KnotSemanticError", "parse_knot_expression"]


class KnotSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class KnotSemanticError(KnotSyntaxError):
    """Well-formed input that does not denote a knot."""


_TOKEN = re.compile(r"\s*(Wh\+|seifert|alt|-?\d+|[A-Za-z]|[(),#\[\]])")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise KnotSyntaxError(f"unexpected character {text[start]!r}", text, start)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def error(self, message: str) -> KnotSyntaxError:
        return KnotSyntaxError(message, self.text, self.pos())

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise self.error(f"expected {expected!r}, got end of input" if expected else "unexpected end of input")
        if expected is not None and tok != expected:
            raise self.error(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            raise self.error(f"expected integer, got {tok!r}")
        self.i += 1
        return int(tok)

    def expr(self) -> KnotExpr:
        node = self.term()
        while self.peek() == "#":
            self.take("#")
            node = Sum(node, self.term())
        return node

    def term(self) -> KnotExpr:
        start = self.pos()
        tok = self.peek()
        if tok == "U":
            self.take()
            return Unknot()
        if tok == "T":
            self.take()
            self.take("(")
            p = self.integer()
            self.take(",")
            q = self.integer()
            self.take(")")
            try:
                return Torus(p, q)
            except InvalidKnotError as exc:
                raise KnotSemanticError(str(exc), self.text, start) from None
        if tok in ("m", "r"):
            self.take()
            self.take("(")
            inner = self.expr()
            self.take(")")
            return Mirror(inner) if tok == "m" else Reverse(inner)
        if tok == "Wh+":
            self.take()
            self.take("(")
            inner = self.expr()
            self.take(",")
            twists = self.integer()
            self.take(")")
            return WhiteheadPos(inner, twists)
        if tok == "D":
            self.take()
            self.take("(")
            j = self.expr()
            self.take(",")
            s = self.integer()
            self.take(",")
            k = self.expr()
            self.take(",")
            t = self.integer()
            self.take(")")
            return GenDouble(j, s, k, t)
        if tok == "seifert":
            self.take()
            self.take("(")
            rows = self.matrix()
            alt = False
            if self.peek() == ",":
                self.take(",")
                self.take("alt")
                alt = True
            self.take(")")
            try:
                return RawSeifert(IntMatrix.from_rows(rows), alt)
            except (InvalidKnotError, ValueError) as exc:
                raise KnotSemanticError(str(exc), self.text, start) from None
        if tok == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if tok is None:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected token {tok!r}")

    def matrix(self) -> list[list[int]]:
        self.take("[")
        rows = [self.row()]
        while self.peek() == ",":
            self.take(",")
            rows.append(self.row())
        self.take("]")
        return rows

    def row(self) -> list[int]:
        self.take("[")
        vals = [self.integer()]
        while self.peek() == ",":
            self.take(",")
            vals.append(self.integer())
        self.take("]")
        return vals


def parse_knot_expression(text: str) -> KnotExpr:
    """Parse ``text`` into a :class:`KnotExpr`.

    >>> str(parse_knot_expression("T(2,3) # r(T(2,3))"))
    'T(2,3) # r(T(2,3))'
    """
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise parser.error(f"unexpected trailing token {parser.peek()!r}")
    return node
