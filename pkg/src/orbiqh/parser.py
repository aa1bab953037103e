"""Parser for polynomial expressions in X1..XM, q and T.

Grammar (whitespace ignored)::

    poly     := ['-'] term (('+' | '-') term)*
    term     := atom ('*' atom)*
    atom     := coeff | factor
    factor   := var ['^' rational]
    var      := 'X' digits | 'q' | 'T'
    rational := int | '(' ['-'] int ['/' int] ')'
    coeff    := rational

X exponents must be nonnegative integers; q and T exponents may be any rational.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .novikov import NovikovPolynomial

_TOKEN = re.compile(r"\s*(?:(X\d+)|([qT])|(\d+)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at column {pos + 1}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^ {self.message}"


class UnknownVariable(ParseError):
    pass


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(0).strip() == "":
                break
            start = m.start(m.lastindex)
            kind = ("var", "param", "int", "op")[m.lastindex - 1]
            self.tokens.append((kind, m.group(m.lastindex), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value or kind == "end":
            raise ParseError(f"expected {value!r}", self.text, pos)

    def fail(self, message):
        raise ParseError(message, self.text, self.peek()[2])


def _rational(lx: _Lexer) -> Fraction:
    kind, v, pos = lx.peek()
    if kind == "int":
        lx.take()
        return Fraction(int(v))
    if v != "(":
        lx.fail("expected a rational")
    lx.take()
    sign = 1
    if lx.peek()[1] == "-":
        lx.take()
        sign = -1
    kind, v, pos = lx.take()
    if kind != "int":
        raise ParseError("expected an integer", lx.text, pos)
    num = int(v)
    den = 1
    if lx.peek()[1] == "/":
        lx.take()
        kind, v, pos = lx.take()
        if kind != "int":
            raise ParseError("expected an integer", lx.text, pos)
        den = int(v)
        if den == 0:
            raise ParseError("zero denominator", lx.text, pos)
    lx.expect(")")
    return sign * Fraction(num, den)


def _term(lx: _Lexer, nvars: int) -> NovikovPolynomial:
    coeff = Fraction(1)
    x = [0] * nvars
    q = t = Fraction(0)
    while True:
        kind, v, pos = lx.peek()
        if kind in ("int",) or v == "(":
            coeff *= _rational(lx)
        elif kind in ("var", "param"):
            lx.take()
            e = Fraction(1)
            if lx.peek()[1] == "^":
                lx.take()
                e = _rational(lx)
            if kind == "param":
                if v == "q":
                    q += e
                else:
                    t += e
            else:
                k = int(v[1:])
                if not 1 <= k <= nvars:
                    raise UnknownVariable(f"unknown variable {v}", lx.text, pos)
                if e.denominator != 1 or e < 0:
                    raise ParseError(f"exponent of {v} must be a nonnegative integer", lx.text, pos)
                x[k - 1] += int(e)
        elif kind == "op" and v.isalpha():
            raise UnknownVariable(f"unknown variable {v!r}", lx.text, pos)
        else:
            lx.fail("expected a coefficient or variable")
        if lx.peek()[1] != "*":
            break
        lx.take()
    return NovikovPolynomial.monomial(nvars, coeff, x, q, t)


def parse(text: str, nvars: int) -> NovikovPolynomial:
    """Parse ``text`` into a polynomial in ``nvars`` variables X1..X{nvars}."""
    lx = _Lexer(text)
    if lx.peek()[0] == "end":
        lx.fail("empty expression")
    sign = 1
    if lx.peek()[1] == "-":
        lx.take()
        sign = -1
    out = _term(lx, nvars) * sign
    while lx.peek()[0] != "end":
        kind, v, pos = lx.take()
        if v not in "+-" or kind != "op":
            raise ParseError("expected '+' or '-'", text, pos)
        term = _term(lx, nvars)
        out = out + term if v == "+" else out - term
    return out
