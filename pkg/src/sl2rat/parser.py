"""Parser for the rational-function expression grammar.

Grammar: integer literals, the variable z, binary + - * /, unary -,
^ with a nonnegative integer exponent, and parentheses.  Implicit
multiplication is not accepted.  Fractions are ordinary divisions (3/2).
The canonical printer lives next to the types (`format_poly`,
`format_ratfunc`); parse(format(x)) == x on canonical text.
"""
from __future__ import annotations

from typing import List, Tuple

from .errors import ParseError
from .poly import Poly
from .ratfunc import RatFunc

_OPS = set("+-*/^()")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch == "z":
            tokens.append(("var", ch, i))
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return self.advance()

    def parse(self) -> RatFunc:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.advance()[0]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self) -> RatFunc:
        if self.peek()[0] == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            self.advance()
            return base ** int(tok[1])
        return base

    def atom(self) -> RatFunc:
        tok = self.peek()
        if tok[0] == "int":
            self.advance()
            return RatFunc.constant(int(tok[1]))
        if tok[0] == "var":
            self.advance()
            return RatFunc.variable()
        if tok[0] == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_ratfunc(text: str) -> RatFunc:
    """Parse an expression into canonical form.

    Raises ParseError with the offending position, or ZeroDenominator when
    a division by the zero polynomial occurs.
    """
    return _Parser(text).parse()


def parse_poly(text: str) -> Poly:
    """Parse an expression that must denote a polynomial."""
    f = parse_ratfunc(text)
    return f.as_poly()
