"""Recursive-descent parser for polynomial expressions in x, y, z.

Grammar (whitespace ignored)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := 'x' | 'y' | 'z' | uint | '(' expr ')'

Implicit multiplication is rejected.  Division is only allowed by a
nonzero constant, so that rational coefficients written by :func:`render`
read back unchanged.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import PolySyntaxError
from .poly import GREVLEX, MultiPoly, VARIABLES

_VARS = {"x": 0, "y": 1, "z": 2}


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in _VARS:
            tokens.append(("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("eof", None, n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            q = self.factor()
            if op == "*":
                p = p * q
            else:
                d = q.as_dict()
                if len(d) != 1 or next(iter(d)) != (0, 0, 0, 0):
                    raise PolySyntaxError("division only by a nonzero constant", pos)
                p = p * (1 / d[(0, 0, 0, 0)])
        return p

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            n = self.take("int")[1]
            base = base**n
        return base

    def base(self):
        kind, val, pos = self.peek()
        if kind == "var":
            self.take()
            return MultiPoly.var(val)
        if kind == "int":
            self.take()
            return MultiPoly.constant(val)
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "eof" else repr(val)
        raise PolySyntaxError(f"expected a variable, integer or '(', found {what}", pos)


def parse_poly(text):
    """Parse ``text`` into a canonical :class:`MultiPoly`.

    >>> str(parse_poly("(x + y)*(x - y)"))
    'x^2 - y^2'
    """
    return _Parser(text).parse().with_order(GREVLEX)


def _render_monomial(m):
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(p):
    """Canonical text form of ``p``, readable back by :func:`parse_poly`."""
    terms = p.terms
    if not terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        mon = _render_monomial(m)
        if not mon:
            body = str(a)
        elif a == 1:
            body = mon
        elif a.denominator == 1:
            body = f"{a.numerator}*{mon}"
        else:
            body = f"{a.numerator}/{a.denominator}*{mon}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
