"""Coefficient expressions: integers, sqrt of integers, + - * / and parens.

Grammar (whitespace insensitive):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := integer | 'sqrt(' integer ')' | '(' expr ')' | '-' factor

Expressions evaluate directly to FieldElement, so sqrt(8) normalizes to
2*sqrt(2) on the spot and a result needing more than two independent surds
raises FieldTooLarge. ParseError carries the offending position.
"""

from __future__ import annotations

from .errors import ParseError
from .field import FieldElement, as_field


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise self.error(f"expected {ch!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def factor(self) -> FieldElement:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if self.text.startswith("sqrt", self.pos):
            self.pos += 4
            self.expect("(")
            self.skip_ws()
            neg = self.take("-")
            n = self.integer()
            self.expect(")")
            if neg:
                raise self.error("sqrt of a negative integer")
            return FieldElement.sqrt_int(n)
        if ch.isdigit():
            return as_field(self.integer())
        raise self.error("expected a number, sqrt(...), or parenthesis")

    def term(self) -> FieldElement:
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.factor()
            elif ch == "/":
                self.pos += 1
                divisor = self.factor()
                if divisor.is_zero():
                    raise self.error("division by zero")
                value = value / divisor
            else:
                return value

    def expr(self) -> FieldElement:
        value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value


def parse_coeff(text: str) -> FieldElement:
    """Evaluate a coefficient expression to an exact FieldElement."""
    parser = _Parser(text)
    value = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("unexpected trailing input")
    return value
