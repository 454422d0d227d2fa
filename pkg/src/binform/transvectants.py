"""Transvectants, polars, and the Gordan / Clebsch-Gordan series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError, OrderMismatchError
from .forms import BiForm, BinaryForm, binom


def transvectant(E: BinaryForm, F: BinaryForm, r: int) -> BinaryForm:
    """The r-th transvectant (E, F)_r.

    Normalized by (e-r)!(f-r)!/(e!f!) so that (E, F)_0 = E*F.  Returns the
    zero form of order e + f - 2r whenever r exceeds min(e, f).
    """
    if r < 0:
        raise ValueError("transvectant index must be non-negative")
    e, f = E.order, F.order
    order = e + f - 2 * r
    if r > min(e, f) or E.is_zero() or F.is_zero():
        return BinaryForm.zero(order)
    total = BinaryForm.zero(order)
    for i in range(r + 1):
        term = E.diff(r - i, i) * F.diff(i, r - i)
        total = total + term.scale((-1) ** i * binom(r, i))
    return total.scale(Fraction(factorial(e - r) * factorial(f - r), factorial(e) * factorial(f)))


def polar(E: BinaryForm, m: int) -> BiForm:
    """m-th polar (e-m)!/e! * (y0 d/dx0 + y1 d/dx1)^m E, of bi-order (e-m, m)."""
    e = E.order
    if not 0 <= m <= e:
        raise DomainError(f"polar index {m} out of range for order {e}")
    scale = Fraction(factorial(e - m), factorial(e))
    columns = []
    for k in range(m + 1):
        D = E.diff(m - k, k)
        columns.append([c * binom(m, k) * scale for c in D.coeffs])
    return BiForm(e - m, m, tuple(tuple(col[i] for col in columns) for i in range(e - m + 1)))


def sym_polarize(E: BinaryForm) -> BiForm:
    """Half-order polar of an even-order form; symmetric in x and y."""
    if E.order % 2:
        raise OrderMismatchError(f"symmetric polarization needs even order, got {E.order}")
    return polar(E, E.order // 2)


@dataclass(frozen=True)
class GordanParams:
    a1: int
    a2: int
    a3: int
    e: int
    f: int
    g: int

    def is_legal(self) -> bool:
        a1, a2, a3 = self.a1, self.a2, self.a3
        return (min(a1, a2, a3) >= 0
                and a2 + a3 <= self.e and a1 + a3 <= self.f and a1 + a2 <= self.g
                and (a1 == 0 or a2 + a3 == self.e))

    def validate(self, E=None, F=None, G=None):
        if not self.is_legal():
            raise DomainError(f"illegal Gordan parameters {self}")
        for form, order, name in ((E, self.e, "E"), (F, self.f, "F"), (G, self.g, "G")):
            if form is not None and form.order != order:
                raise OrderMismatchError(f"{name} has order {form.order}, expected {order}")


def gordan_sides(E: BinaryForm, F: BinaryForm, G: BinaryForm, p: GordanParams):
    """Left and right sides of the Gordan series with parameters ``p``."""
    p.validate(E, F, G)
    e, f, g = p.e, p.f, p.g
    a1, a2, a3 = p.a1, p.a2, p.a3
    order = e + f + g - 2 * (a1 + a2 + a3)

    lhs = BinaryForm.zero(order)
    for i in range(a2 + 1):
        num = binom(f - a1 - a3, i) * binom(a2, i)
        if not num:
            continue
        coef = Fraction(num, binom(e + f - 2 * a3 - i + 1, i))
        lhs = lhs + transvectant(transvectant(E, F, a3 + i), G, a1 + a2 - i).scale(coef)

    rhs = BinaryForm.zero(order)
    for i in range(a3 + 1):
        num = binom(g - a1 - a2, i) * binom(a3, i)
        if not num:
            continue
        coef = Fraction(num, binom(e + g - 2 * a2 - i + 1, i))
        rhs = rhs + transvectant(transvectant(E, G, a2 + i), F, a1 + a3 - i).scale(coef)
    return lhs, rhs.scale((-1) ** a1)


def gordan_residual(E: BinaryForm, F: BinaryForm, G: BinaryForm, p: GordanParams) -> BinaryForm:
    """LHS - RHS of the Gordan series; identically zero."""
    lhs, rhs = gordan_sides(E, F, G, p)
    return lhs - rhs


def clebsch_gordan_expand(E: BinaryForm, F: BinaryForm) -> list:
    """Terms (r, scalar, polar) with E(x)F(y) = sum scalar * omega^r * polar."""
    e, f = E.order, F.order
    terms = []
    for r in range(min(e, f) + 1):
        scalar = Fraction(binom(e, r) * binom(f, r), binom(e + f - r + 1, r))
        terms.append((r, scalar, polar(transvectant(E, F, r), f - r)))
    return terms


def clebsch_gordan_sum(terms: list) -> BiForm:
    total = None
    for r, scalar, P in terms:
        piece = (BiForm.omega(r) * P).scale(scalar)
        total = piece if total is None else total + piece
    return total
