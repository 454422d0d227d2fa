"""Dense binary forms and bihomogeneous forms with exact rational coefficients.

A ``BinaryForm`` of order ``e`` stores the coefficient of
``x0^(e-i) * x1^i`` at index ``i``.  A ``BiForm`` of bi-order ``(m, n)``
stores the coefficient of ``x0^(m-i) x1^i y0^(n-j) y1^j`` at ``[i][j]``.
Coefficients are plain (not binomially weighted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import ExactDivisionError, OrderMismatchError

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(value)


def falling(n: int, k: int) -> int:
    """n * (n-1) * ... * (n-k+1)."""
    out = 1
    for t in range(k):
        out *= n - t
    return out


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero unless 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class BinaryForm:
    order: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        expected = max(self.order + 1, 0)
        if len(coeffs) != expected:
            raise OrderMismatchError(
                f"order {self.order} form needs {expected} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "BinaryForm":
        return cls(order, (0,) * max(order + 1, 0))

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, order: int, i: int, c=1) -> "BinaryForm":
        """c * x0^(order-i) * x1^i."""
        if not 0 <= i <= order:
            raise ValueError(f"monomial index {i} out of range for order {order}")
        coeffs = [0] * (order + 1)
        coeffs[i] = c
        return cls(order, coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "BinaryForm":
        return cls(len(coeffs) - 1, tuple(coeffs))

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------
    def _check_same_order(self, other: "BinaryForm"):
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check_same_order(other)
        return BinaryForm(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        self._check_same_order(other)
        return BinaryForm(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return BinaryForm(self.order, tuple(-a for a in self.coeffs))

    def scale(self, c) -> "BinaryForm":
        c = as_rational(c)
        return BinaryForm(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            order = self.order + other.order
            if order < 0 or self.order < 0 or other.order < 0:
                return BinaryForm.zero(order)
            out = [Fraction(0)] * (order + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return BinaryForm(order, tuple(out))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if isinstance(other, BinaryForm):
            return exact_divide(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "BinaryForm":
        out = BinaryForm.constant(1)
        for _ in range(k):
            out = out * self
        return out

    # -- calculus --------------------------------------------------------
    def diff(self, a: int, b: int) -> "BinaryForm":
        """Partial derivative d^a/dx0^a d^b/dx1^b."""
        order = self.order - a - b
        if order < 0:
            return BinaryForm.zero(order)
        e = self.order
        out = []
        for j in range(order + 1):
            i = j + b
            c = self.coeffs[i]
            out.append(c * falling(e - i, a) * falling(i, b) if c else Fraction(0))
        return BinaryForm(order, tuple(out))

    def __call__(self, x0, x1) -> Fraction:
        x0, x1 = as_rational(x0), as_rational(x1)
        e = self.order
        return sum((c * x0 ** (e - i) * x1**i for i, c in enumerate(self.coeffs)), Fraction(0))

    def leading_coefficient(self) -> Fraction:
        """Value at x0 = 1, x1 = 0 (the seminvariant of a covariant)."""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def ratio_to(self, other: "BinaryForm"):
        """Return c with self == c * other, or None if no such c exists."""
        self._check_same_order(other)
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        k = next(i for i, b in enumerate(other.coeffs) if b)
        c = self.coeffs[k] / other.coeffs[k]
        return c if self == other.scale(c) else None

    def as_biform(self) -> "BiForm":
        """View as a bihomogeneous form of bi-order (order, 0)."""
        return BiForm(self.order, 0, tuple((c,) for c in self.coeffs))

    # -- I/O ------------------------------------------------------------
    def __str__(self) -> str:
        terms = []
        e = self.order
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append((c, _monomial_str(("x0", e - i), ("x1", i))))
        return _join_terms(terms)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "BinaryForm":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["order"]), tuple(Fraction(c) for c in data["coeffs"]))


@dataclass(frozen=True)
class BiForm:
    x_order: int
    y_order: int
    coeffs: tuple

    def __post_init__(self):
        m, n = self.x_order, self.y_order
        if m < 0 or n < 0:
            raise OrderMismatchError(f"negative bi-order ({m}, {n})")
        rows = tuple(tuple(as_rational(c) for c in row) for row in self.coeffs)
        if len(rows) != m + 1 or any(len(row) != n + 1 for row in rows):
            raise OrderMismatchError(f"coefficient grid does not match bi-order ({m}, {n})")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def zero(cls, m: int, n: int) -> "BiForm":
        return cls(m, n, tuple((0,) * (n + 1) for _ in range(m + 1)))

    @classmethod
    def outer(cls, E: BinaryForm, F: BinaryForm) -> "BiForm":
        """E(x) * F(y)."""
        return cls(E.order, F.order, tuple(tuple(a * b for b in F.coeffs) for a in E.coeffs))

    @classmethod
    def omega(cls, power: int = 1) -> "BiForm":
        """(x0*y1 - x1*y0)^power."""
        base = cls(1, 1, ((0, 1), (-1, 0)))
        out = cls(0, 0, ((1,),))
        for _ in range(power):
            out = out * base
        return out

    @property
    def bi_order(self) -> tuple:
        return (self.x_order, self.y_order)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_symmetric(self) -> bool:
        if self.x_order != self.y_order:
            return False
        n = self.x_order
        return all(self.coeffs[i][j] == self.coeffs[j][i] for i in range(n + 1) for j in range(i))

    def swap(self) -> "BiForm":
        """Exchange the roles of x and y."""
        return BiForm(self.y_order, self.x_order, tuple(zip(*self.coeffs)))

    def _check_same_order(self, other):
        if self.bi_order != other.bi_order:
            raise OrderMismatchError(f"bi-orders differ: {self.bi_order} vs {other.bi_order}")

    def __add__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        self._check_same_order(other)
        return BiForm(self.x_order, self.y_order, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "BiForm":
        c = as_rational(c)
        return BiForm(self.x_order, self.y_order, tuple(tuple(c * a for a in r) for r in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            other = other.as_biform()
        if isinstance(other, BiForm):
            m, n = self.x_order + other.x_order, self.y_order + other.y_order
            out = [[Fraction(0)] * (n + 1) for _ in range(m + 1)]
            for i, row in enumerate(self.coeffs):
                for j, a in enumerate(row):
                    if not a:
                        continue
                    for k, row2 in enumerate(other.coeffs):
                        for l, b in enumerate(row2):
                            if b:
                                out[i + k][j + l] += a * b
            return BiForm(m, n, tuple(tuple(r) for r in out))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if isinstance(other, BiForm):
            return exact_divide(self, other)
        return NotImplemented

    def __str__(self) -> str:
        m, n = self.x_order, self.y_order
        terms = []
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    terms.append((c, _monomial_str(("x0", m - i), ("x1", i), ("y0", n - j), ("y1", j))))
        return _join_terms(terms)

    def to_json(self) -> dict:
        return {
            "x_order": self.x_order,
            "y_order": self.y_order,
            "coeffs": [[str(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "BiForm":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["x_order"]), int(data["y_order"]),
                   tuple(tuple(Fraction(c) for c in row) for row in data["coeffs"]))


def specialize_y_to_x(F: BiForm) -> BinaryForm:
    """Substitute y0 := x0, y1 := x1."""
    out = [Fraction(0)] * (F.x_order + F.y_order + 1)
    for i, row in enumerate(F.coeffs):
        for j, c in enumerate(row):
            out[i + j] += c
    return BinaryForm(F.x_order + F.y_order, tuple(out))


# -- exact division --------------------------------------------------------
#
# Both kinds are divided as polynomials in their full variable set under the
# lex order x1 > y1 > x0 > y0.  Terms are keyed by exponent tuples in that
# variable order so that tuple comparison is the monomial order.

def _binary_terms(F: BinaryForm) -> dict:
    e = F.order
    return {(i, e - i): c for i, c in enumerate(F.coeffs) if c}


def _bi_terms(F: BiForm) -> dict:
    m, n = F.x_order, F.y_order
    return {(i, j, m - i, n - j): c
            for i, row in enumerate(F.coeffs) for j, c in enumerate(row) if c}


def _divide_terms(P: dict, Q: dict):
    P = dict(P)
    lead = max(Q)
    lead_c = Q[lead]
    quot, rem = {}, {}
    while P:
        mono = max(P)
        c = P.pop(mono)
        shift = tuple(a - b for a, b in zip(mono, lead))
        if min(shift) < 0:
            rem[mono] = c
            continue
        q = c / lead_c
        quot[shift] = quot.get(shift, 0) + q
        for qm, qc in Q.items():
            if qm == lead:
                continue
            target = tuple(a + b for a, b in zip(shift, qm))
            val = P.get(target, 0) - q * qc
            if val:
                P[target] = val
            else:
                P.pop(target, None)
    return quot, rem


def exact_divide(P, Q):
    """Return P / Q, raising ExactDivisionError if Q does not divide P."""
    if type(P) is not type(Q):
        raise TypeError("exact_divide needs two BinaryForms or two BiForms")
    if Q.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if isinstance(P, BinaryForm):
        order = P.order - Q.order
        if P.is_zero():
            return BinaryForm.zero(order)
        if order < 0:
            raise ExactDivisionError("divisor has larger order than dividend", P)
        quot, rem = _divide_terms(_binary_terms(P), _binary_terms(Q))
        if rem:
            remainder = BinaryForm(P.order, tuple(rem.get((i, P.order - i), 0) for i in range(P.order + 1)))
            raise ExactDivisionError(f"nonzero remainder {remainder}", remainder)
        return BinaryForm(order, tuple(quot.get((i, order - i), 0) for i in range(order + 1)))

    m, n = P.x_order - Q.x_order, P.y_order - Q.y_order
    if m < 0 or n < 0:
        if P.is_zero():
            raise OrderMismatchError("quotient would have negative bi-order")
        raise ExactDivisionError("divisor has larger bi-order than dividend", P)
    if P.is_zero():
        return BiForm.zero(m, n)
    quot, rem = _divide_terms(_bi_terms(P), _bi_terms(Q))
    if rem:
        pm, pn = P.bi_order
        remainder = BiForm(pm, pn, tuple(
            tuple(rem.get((i, j, pm - i, pn - j), 0) for j in range(pn + 1)) for i in range(pm + 1)))
        raise ExactDivisionError(f"nonzero remainder {remainder}", remainder)
    return BiForm(m, n, tuple(
        tuple(quot.get((i, j, m - i, n - j), 0) for j in range(n + 1)) for i in range(m + 1)))


# -- printing ---------------------------------------------------------------

def _monomial_str(*powers) -> str:
    parts = []
    for name, k in powers:
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _join_terms(terms: Iterable) -> str:
    out = ""
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out or "0"
