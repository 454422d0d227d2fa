import random
from fractions import Fraction
import pytest
from hypothesis import given
from hypothesis import strategies as st

from binform import (
    BiForm, BinaryForm, GordanParams, clebsch_gordan_expand, gordan_residual, parse_biform,
    parse_form, polar, specialize_y_to_x, sym_polarize, transvectant,
)
from binform.errors import DomainError, OrderMismatchError
from binform.transvectants import clebsch_gordan_sum, gordan_sides
from binform.randforms import random_gordan_params

from conftest import X0, X1, forms, forms_up_to, from_sympy, omega_transvectant, to_sympy


def omega_oracle(E, F, r):
    T = omega_transvectant(to_sympy(E), E.order, to_sympy(F), F.order, r)
    return from_sympy(T, E.order + F.order - 2 * r)


def test_examples():
    E, F = parse_form("x0^2 - 3*x0*x1"), parse_form("x1^3 + x0*x1^2")
    assert transvectant(E, F, 0) == E * F
    assert transvectant(parse_form("x0^2"), parse_form("x1^2"), 1) == parse_form("x0*x1")
    assert transvectant(parse_form("x0*x1"), parse_form("x0*x1"), 2) == BinaryForm.constant(Fraction(-1, 2))
    assert transvectant(parse_form("x0^3"), parse_form("x1^3"), 3) == BinaryForm.constant(1)


def test_index_above_orders_gives_zero():
    T = transvectant(parse_form("x0^2"), parse_form("x1^5"), 3)
    assert T.is_zero() and T.order == 1


@given(forms_up_to(5), forms_up_to(5), st.integers(0, 5))
def test_matches_omega_process(E, F, r):
    assert transvectant(E, F, r) == omega_oracle(E, F, r)


@given(forms_up_to(6), forms_up_to(6), st.integers(0, 6))
def test_swap_sign(E, F, r):
    assert transvectant(F, E, r) == transvectant(E, F, r).scale((-1) ** r)


@given(forms_up_to(5), st.integers(0, 2).map(lambda k: 2 * k + 1))
def test_odd_self_transvectant_vanishes(E, r):
    assert transvectant(E, E, r).is_zero()


@given(forms_up_to(4), forms_up_to(4), st.integers(0, 4), st.integers(-3, 3))
def test_equivariant_under_shear(E, F, r, t):
    """(E o g, F o g)_r = (E, F)_r o g for g: x0 -> x0 + t x1."""
    def shear(G):
        expr = to_sympy(G).subs({X0: X0 + t * X1}, simultaneous=True)
        return from_sympy(expr, G.order)
    T = transvectant(E, F, r)
    if T.order < 0:
        return
    assert transvectant(shear(E), shear(F), r) == shear(T)


def test_polar_examples():
    E = parse_form("x0^2 + 5*x1^2")
    assert polar(E, 0) == E.as_biform()
    assert polar(parse_form("x0^2"), 1) == parse_biform("x0*y0")
    assert polar(parse_form("x0*x1"), 1) == parse_biform("x0*y1/2 + x1*y0/2")
    with pytest.raises(DomainError):
        polar(E, 3)


@given(forms_up_to(6), st.data())
def test_polar_restricts_to_form(E, data):
    m = data.draw(st.integers(0, E.order))
    assert specialize_y_to_x(polar(E, m)) == E


def test_sym_polarize_examples():
    assert sym_polarize(parse_form("x0*x1")) == parse_biform("x0*y1/2 + x1*y0/2")
    assert sym_polarize(BinaryForm.constant(7)) == BiForm(0, 0, ((7,),))
    assert sym_polarize(parse_form("x0^4")) == parse_biform("x0^2*y0^2")
    with pytest.raises(OrderMismatchError):
        sym_polarize(parse_form("x0^3"))


@given(st.integers(0, 3).flatmap(lambda k: forms(2 * k)))
def test_sym_polarize_is_symmetric(E):
    assert sym_polarize(E).is_symmetric()


def test_gordan_illegal_params():
    E, F, G = parse_form("x0^2"), parse_form("x1^2"), parse_form("x0*x1")
    with pytest.raises(DomainError):
        gordan_sides(E, F, G, GordanParams(1, 0, 0, 2, 2, 2))
    with pytest.raises(OrderMismatchError):
        gordan_sides(E, F, G, GordanParams(0, 0, 0, 2, 2, 3))


def test_gordan_equal_forms():
    E = parse_form("x0^4")
    lhs, rhs = gordan_sides(E, E, E, GordanParams(0, 1, 1, 4, 4, 4))
    assert lhs.is_zero() and rhs.is_zero()


@given(st.integers(0, 2**32))
def test_gordan_identity(seed):
    rng = random.Random(seed)
    p = random_gordan_params(rng, 5)
    E, F, G = (BinaryForm(n, tuple(rng.randint(-4, 4) for _ in range(n + 1))) for n in (p.e, p.f, p.g))
    assert gordan_residual(E, F, G, p).is_zero()


def test_clebsch_gordan_examples():
    terms = clebsch_gordan_expand(parse_form("x0"), parse_form("x1"))
    assert [(r, c) for r, c, _ in terms] == [(0, 1), (1, Fraction(1, 2))]
    assert clebsch_gordan_sum(terms) == parse_biform("x0*y1")
    terms = clebsch_gordan_expand(parse_form("x0^3 - x1^3"), BinaryForm.constant(2))
    assert len(terms) == 1


@given(forms_up_to(5), forms_up_to(5))
def test_clebsch_gordan_reconstructs(E, F):
    assert clebsch_gordan_sum(clebsch_gordan_expand(E, F)) == BiForm.outer(E, F)
