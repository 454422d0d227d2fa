"""Parser for form expressions such as ``"x0^2 - 2*x0*x1"`` or
``"x0*x1*(x0 - x1)"``.

Grammar (whitespace ignored)::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor (("*"|"/") factor)*       # "/" only by a constant
    factor := atom ["^" INT]
    atom   := NUMBER | VAR | "(" expr ")"
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import OrderMismatchError, ParseError
from .forms import BiForm, BinaryForm

_VARS = ("x0", "x1", "y0", "y1")
_TOKEN = re.compile(r"\s*(?:(\d+)|(x0|x1|y0|y1)|([-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


# Polynomials here are dicts {(e_x0, e_x1, e_y0, e_y1): Fraction}.

def _padd(p, q, sign=1):
    out = dict(p)
    for k, v in q.items():
        val = out.get(k, 0) + sign * v
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


def _pmul(p, q):
    out = {}
    for k1, v1 in p.items():
        for k2, v2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            val = out.get(k, 0) + v1 * v2
            if val:
                out[k] = val
            else:
                out.pop(k, None)
    return out


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ParseError(f"expected {op!r}, got {tok[1]!r}")

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        p = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = {k: -v for k, v in p.items()}
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            p = _padd(p, self.term(), -1 if op == "-" else 1)
        return p

    def term(self):
        p = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.factor()
            if op == "*":
                p = _pmul(p, q)
            else:
                if not q or any(any(k) for k in q) or len(q) != 1:
                    raise ParseError("division is only allowed by a nonzero constant")
                c = q[(0, 0, 0, 0)]
                p = {k: v / c for k, v in p.items()}
        return p

    def factor(self):
        p = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise ParseError("exponent must be a non-negative integer")
            out = {(0, 0, 0, 0): Fraction(1)}
            for _ in range(tok[1]):
                out = _pmul(out, p)
            p = out
        return p

    def atom(self):
        tok = self.take()
        if tok[0] == "num":
            return {(0, 0, 0, 0): Fraction(tok[1])} if tok[1] else {}
        if tok[0] == "var":
            k = [0, 0, 0, 0]
            k[_VARS.index(tok[1])] = 1
            return {tuple(k): Fraction(1)}
        if tok == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        if tok == ("op", "-"):
            return {k: -v for k, v in self.factor().items()}
        raise ParseError(f"unexpected token {tok[1]!r}")


def _parse_poly(text: str) -> dict:
    return _Parser(text).parse()


def parse_form(text: str, expected_order: int | None = None) -> BinaryForm:
    """Parse a homogeneous expression in x0, x1."""
    p = _parse_poly(text)
    if any(k[2] or k[3] for k in p):
        raise ParseError("unknown variable: binary forms use only x0, x1")
    degrees = {k[0] + k[1] for k in p}
    if len(degrees) > 1:
        raise ParseError(f"expression is not homogeneous (degrees {sorted(degrees)})")
    if degrees:
        order = degrees.pop()
        if expected_order is not None and order != expected_order:
            raise OrderMismatchError(f"expected order {expected_order}, got {order}")
    elif expected_order is not None:
        order = expected_order
    else:
        order = 0
    return BinaryForm(order, tuple(p.get((order - i, i, 0, 0), 0) for i in range(order + 1)))


def parse_biform(text: str, bi_order: tuple | None = None) -> BiForm:
    """Parse an expression homogeneous separately in (x0, x1) and (y0, y1)."""
    p = _parse_poly(text)
    degrees = {(k[0] + k[1], k[2] + k[3]) for k in p}
    if len(degrees) > 1:
        raise ParseError(f"expression is not bihomogeneous (bi-degrees {sorted(degrees)})")
    if degrees:
        m, n = degrees.pop()
        if bi_order is not None and (m, n) != tuple(bi_order):
            raise OrderMismatchError(f"expected bi-order {tuple(bi_order)}, got {(m, n)}")
    elif bi_order is not None:
        m, n = bi_order
    else:
        m, n = 0, 0
    return BiForm(m, n, tuple(
        tuple(p.get((m - i, i, n - j, j), 0) for j in range(n + 1)) for i in range(m + 1)))
