import random
from fractions import Fraction
from math import factorial

import pytest
import sympy as sp
from hypothesis import settings
from hypothesis import strategies as st

from binform import BiForm, BinaryForm

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

X0, X1, Y0, Y1 = sp.symbols("x0 x1 y0 y1")

coeff = st.integers(-6, 6)


def forms(order, nonzero=False):
    s = st.lists(coeff, min_size=order + 1, max_size=order + 1).map(
        lambda cs: BinaryForm(order, tuple(cs)))
    if nonzero:
        s = s.filter(bool)
    return s


def forms_up_to(max_order, nonzero=False):
    return st.integers(0, max_order).flatmap(lambda e: forms(e, nonzero))


def to_sympy(F):
    """Plain monomial basis: coefficient i belongs to x0^(e-i) x1^i."""
    if isinstance(F, BiForm):
        m, n = F.bi_order
        return sum(sp.Rational(c.numerator, c.denominator)
                   * X0 ** (m - i) * X1 ** i * Y0 ** (n - j) * Y1 ** j
                   for i, row in enumerate(F.coeffs) for j, c in enumerate(row))
    e = F.order
    return sum((sp.Rational(c.numerator, c.denominator) * X0 ** (e - i) * X1 ** i
                for i, c in enumerate(F.coeffs)), sp.Integer(0))


def from_sympy(expr, order):
    p = sp.Poly(sp.expand(expr), X0, X1)
    coeffs = [Fraction(0)] * (order + 1)
    for (a, b), c in p.terms():
        if c == 0:
            continue
        assert a + b == order
        coeffs[b] = Fraction(int(c.p), int(c.q))
    return BinaryForm(order, tuple(coeffs))


@pytest.fixture
def rng():
    return random.Random(12345)


def omega_transvectant(E, e, F, f, r):
    """Cayley's Omega process on sympy expressions E (order e) and F (order f)."""
    if r > min(e, f):
        return sp.Integer(0)
    expr = E * F.subs({X0: Y0, X1: Y1}, simultaneous=True)
    for _ in range(r):
        expr = sp.diff(expr, X0, Y1) - sp.diff(expr, X1, Y0)
    expr = expr.subs({Y0: X0, Y1: X1}, simultaneous=True)
    return sp.expand(sp.Rational(factorial(e - r) * factorial(f - r), factorial(e) * factorial(f)) * expr)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
