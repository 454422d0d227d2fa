import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from binform import (
    BiForm, BinaryForm, Pencil, TransvectantSeries, bezoutiant, c_constant, odd_series,
    parse_biform, parse_form, taylor_decompose, taylor_reconstruct,
)
from binform.bezoutiant import series_length
from binform.errors import DegeneratePencilError, DomainError, OrderMismatchError
from binform.randforms import random_pencil

from conftest import X0, X1, Y0, Y1, forms, to_sympy


def bezoutiant_oracle(A, B):
    Ay = to_sympy(A).subs({X0: Y0, X1: Y1}, simultaneous=True)
    By = to_sympy(B).subs({X0: Y0, X1: Y1}, simultaneous=True)
    q = sp.cancel((to_sympy(A) * By - to_sympy(B) * Ay) / (X0 * Y1 - X1 * Y0))
    return sp.expand(q)


def test_bezoutiant_examples():
    assert bezoutiant(parse_form("x0"), parse_form("x1")) == BiForm(0, 0, ((1,),))
    assert bezoutiant(parse_form("x0^2"), parse_form("x1^2")) == parse_biform("x0*y1 + x1*y0")


@given(st.integers(1, 5).flatmap(lambda d: st.tuples(forms(d), forms(d))))
def test_bezoutiant_matches_sympy(AB):
    A, B = AB
    R = bezoutiant(A, B)
    assert R.is_symmetric()
    assert sp.expand(to_sympy(R) - bezoutiant_oracle(A, B)) == 0


def test_pencil_validation():
    with pytest.raises(OrderMismatchError):
        Pencil(parse_form("x0"), parse_form("x1^2"))
    with pytest.raises(DegeneratePencilError):
        Pencil(parse_form("x0^2"), parse_form("3*x0^2"))
    with pytest.raises(DomainError):
        Pencil(BinaryForm.constant(1), BinaryForm.constant(2))
    P = Pencil(parse_form("x0^2"), parse_form("x1^2"))
    assert P.d == 2 and P.T(1) == parse_form("x0*x1")
    assert bezoutiant(P) == bezoutiant(P.A, P.B)


def test_c_constant_examples():
    assert c_constant(2, 0) == 2
    assert c_constant(3, 0) == 3
    assert c_constant(3, 1) == Fraction(1, 2)
    assert c_constant(1, 0) == 1
    with pytest.raises(DomainError):
        c_constant(3, 2)


def test_odd_series_examples():
    assert odd_series(parse_form("x0^2"), parse_form("x1^2")).terms == (parse_form("x0*x1"),)
    assert odd_series(parse_form("x0^3"), parse_form("x1^3")).terms == (
        parse_form("x0^2*x1^2"), BinaryForm.constant(1))
    A = parse_form("x0^3 - x1^3")
    assert all(T.is_zero() for T in odd_series(A, A).terms)


def test_taylor_examples():
    assert taylor_decompose(parse_biform("x0*y1 + x1*y0"), 2).terms == (parse_form("x0*x1"),)
    assert taylor_decompose(BiForm(0, 0, ((1,),)), 1).terms == (BinaryForm.constant(1),)
    assert taylor_reconstruct(TransvectantSeries(2, (parse_form("x0*x1"),))) == parse_biform("x0*y1 + x1*y0")
    zero = TransvectantSeries(4, (BinaryForm.zero(6), BinaryForm.zero(2)))
    assert taylor_reconstruct(zero) == BiForm.zero(3, 3)


def test_taylor_rejects():
    with pytest.raises(DomainError):
        taylor_decompose(parse_biform("x0*y1"), 2)
    with pytest.raises(OrderMismatchError):
        taylor_decompose(parse_biform("x0*y0"), 3)


def test_series_validation():
    with pytest.raises(OrderMismatchError):
        TransvectantSeries(3, (BinaryForm.zero(4),))
    with pytest.raises(OrderMismatchError):
        TransvectantSeries(3, (BinaryForm.zero(4), BinaryForm.zero(2)))
    S = odd_series(parse_form("x0^3"), parse_form("x1^3"))
    assert TransvectantSeries.from_json(S.to_json()) == S


@given(st.integers(1, 7), st.data())
def test_taylor_round_trip_on_any_symmetric_biform(d, data):
    terms = tuple(data.draw(forms(2 * (d - 2 * r - 1))) for r in range(series_length(d)))
    S = TransvectantSeries(d, terms)
    U = taylor_reconstruct(S)
    assert U.is_symmetric()
    assert taylor_decompose(U, d) == S


@pytest.mark.parametrize("d", range(1, 9))
def test_bezoutiant_series_is_odd_transvectants(d):
    rng = random.Random(d)
    for _ in range(3):
        A, B = random_pencil(d, rng)
        assert taylor_decompose(bezoutiant(A, B), d) == odd_series(A, B)
