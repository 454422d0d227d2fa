"""Compound transvectant expressions over named forms.

Used to describe candidate covariant monomials such as ``(M1,M3)_2``,
``M3^2``, ``M1*M5`` or ``(M1,(M1,M1)_2)_4``.

Grammar::

    basis   := expr (";" expr)*
    expr    := power ("*" power)*
    power   := primary ["^" INT]
    primary := NAME | "(" expr "," expr ")_" INT | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError, ParseError
from .forms import BinaryForm
from .transvectants import transvectant


class Expr:
    def evaluate(self, env: Mapping[str, BinaryForm]) -> BinaryForm:
        raise NotImplementedError

    def order(self, orders: Mapping[str, int]) -> int:
        raise NotImplementedError

    def degree(self) -> int:
        raise NotImplementedError

    def names(self) -> set:
        raise NotImplementedError

    def check(self, orders: Mapping[str, int]):
        """Reject patterns that vanish identically by antisymmetry or index range."""


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def evaluate(self, env):
        try:
            return env[self.name]
        except KeyError:
            raise DomainError(f"no value assigned to {self.name}") from None

    def order(self, orders):
        try:
            return orders[self.name]
        except KeyError:
            raise DomainError(f"no order known for {self.name}") from None

    def degree(self):
        return 1

    def names(self):
        return {self.name}

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Transvect(Expr):
    left: Expr
    right: Expr
    r: int

    def evaluate(self, env):
        return transvectant(self.left.evaluate(env), self.right.evaluate(env), self.r)

    def order(self, orders):
        return self.left.order(orders) + self.right.order(orders) - 2 * self.r

    def degree(self):
        return self.left.degree() + self.right.degree()

    def names(self):
        return self.left.names() | self.right.names()

    def check(self, orders):
        self.left.check(orders)
        self.right.check(orders)
        if self.r > min(self.left.order(orders), self.right.order(orders)):
            raise DomainError(f"{self}: index exceeds the smaller order")
        if self.left == self.right and self.r % 2:
            raise DomainError(f"{self}: odd transvectant of equal arguments vanishes")

    def __str__(self):
        return f"({self.left},{self.right})_{self.r}"


@dataclass(frozen=True)
class Product(Expr):
    factors: tuple

    def evaluate(self, env):
        out = self.factors[0].evaluate(env)
        for f in self.factors[1:]:
            out = out * f.evaluate(env)
        return out

    def order(self, orders):
        return sum(f.order(orders) for f in self.factors)

    def degree(self):
        return sum(f.degree() for f in self.factors)

    def names(self):
        return set().union(*(f.names() for f in self.factors))

    def check(self, orders):
        for f in self.factors:
            f.check(orders)

    def __str__(self):
        return "*".join(_wrap(f) for f in self.factors)


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    k: int

    def evaluate(self, env):
        return self.base.evaluate(env) ** self.k

    def order(self, orders):
        return self.k * self.base.order(orders)

    def degree(self):
        return self.k * self.base.degree()

    def names(self):
        return self.base.names()

    def check(self, orders):
        self.base.check(orders)

    def __str__(self):
        return f"{_wrap(self.base)}^{self.k}"


def _wrap(e: Expr) -> str:
    return f"({e})" if isinstance(e, (Product, Power)) else str(e)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\)_|[(),*^;]))")


def _tokenize(text):
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"cannot parse covariant expression at {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        out.append(("num", int(num)) if num else ("name", name) if name else ("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected token {tok!r} in covariant expression")
        self.i += 1
        return tok

    def expr(self):
        factors = [self.power()]
        while self.peek() == ("op", "*"):
            self.take()
            factors.append(self.power())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def power(self):
        base = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            return Power(base, self.take("num")[1])
        return base

    def primary(self):
        tok = self.peek()
        if tok and tok[0] == "name":
            self.take()
            return Var(tok[1])
        self.take("op", "(")
        first = self.expr()
        if self.peek() == ("op", ","):
            self.take()
            second = self.expr()
            self.take("op", ")_")
            return Transvect(first, second, self.take("num")[1])
        self.take("op", ")")
        return first


def parse_covariant(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input in covariant expression {text!r}")
    return e


def parse_basis(text: str) -> list:
    """Semicolon separated list of covariant expressions."""
    return [parse_covariant(part) for part in text.split(";") if part.strip()]
