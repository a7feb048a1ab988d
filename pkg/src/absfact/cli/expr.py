"""Polynomial expression front end.

Grammar (case-insensitive variables X and Y):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' nonneg-int]
    atom    := number | variable | '(' expr ')'
    number  := int ['/' int]          # rational literal, e.g. 3/2

'^' binds tightest and its exponent must be a nonnegative integer literal.
Parsing produces an expanded canonical sparse polynomial over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..poly import BiPoly
from ..rings import QQ, ZZ


class ExprError(ValueError):
    """Base class for parse errors; carries the source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ExprSyntaxError(ExprError):
    pass


class NonconstantExponent(ExprError):
    pass


class UnknownIdentifier(ExprError):
    pass


@dataclass(frozen=True)
class PolyExpr:
    source: str
    poly: BiPoly  # over Q

    def poly_int(self) -> BiPoly:
        """The same polynomial with cleared denominators, over Z."""
        den = 1
        for c in self.poly.terms.values():
            d = c.denominator
            den = den * d // _gcd(den, d)
        return BiPoly({k: int(c * den) for k, c in self.poly.terms.items()}, ZZ)

    def __str__(self) -> str:
        return self.poly.to_str()


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_X = BiPoly({(1, 0): Fraction(1)}, QQ)
_Y = BiPoly({(0, 1): Fraction(1)}, QQ)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg, cls=ExprSyntaxError):
        raise cls(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self) -> BiPoly:
        out = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return out

    def expr(self) -> BiPoly:
        neg = False
        if self.take("-"):
            neg = True
        else:
            self.take("+")
        acc = self.term()
        if neg:
            acc = -acc
        while True:
            if self.take("+"):
                acc = acc + self.term()
            elif self.take("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> BiPoly:
        acc = self.factor()
        while self.take("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> BiPoly:
        base = self.atom()
        if self.take("^"):
            e = self.exponent()
            return base ** e
        return base

    def exponent(self) -> int:
        ch = self.peek()
        if ch == "(" or ch.isalpha():
            self.error("exponent must be an integer literal", NonconstantExponent)
        if not ch.isdigit():
            self.error("expected a nonnegative integer exponent")
        return self.integer()

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def atom(self) -> BiPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                if not self.peek().isdigit():
                    self.error("expected an integer denominator")
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                return BiPoly.constant(Fraction(num, den), QQ)
            return BiPoly.constant(Fraction(num), QQ)
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            name = self.text[start : self.pos]
            if name.lower() == "x":
                return _X
            if name.lower() == "y":
                return _Y
            self.pos = start
            self.error(f"unknown identifier {name!r}", UnknownIdentifier)
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {ch!r}")


def parse_poly(text: str) -> PolyExpr:
    """Parse an expression into an expanded sparse polynomial over Q."""
    return PolyExpr(text, _Parser(text).parse())
