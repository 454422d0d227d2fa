import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from binform import BinaryForm, parse_form, transvectant
from binform.covexpr import Power, Product, Transvect, Var, parse_covariant
from binform.errors import (
    DomainError, ExactDivisionError, NoRelationError, OrderMismatchError, ParseError,
    UnderdeterminedRelationError,
)
from binform.randforms import random_form, random_pencil
from binform.relations import (
    RESULTANT_D3_CONSTANT, T5_BASIS, T7_BASIS, XI_D3_BASIS, XI_D4_BASIS,
    CovariantMonomialBasis, alpha_table, beta_table, calibrate_resultant_d3, catalan_rho,
    derive_relation, jacobian_criterion_d2, jacobian_criterion_d3, jacobian_necessary,
    jacobian_predicate, jacobian_witness, lambda_covariants_d4, minimal_equation_residual_d4,
    pencil_assignment, q_covariants_d6, resultant_d3, solve_undetermined, sylvester_resultant,
    t5_formula, t7_formula,
)

from conftest import X0, X1, forms, to_sympy


# -- covariant expressions ------------------------------------------------------

def test_parse_covariant():
    e = parse_covariant("(M1,(M1,M3)_2)_4*M5^2")
    assert e == Product((Transvect(Var("M1"), Transvect(Var("M1"), Var("M3"), 2), 4),
                         Power(Var("M5"), 2)))
    assert parse_covariant(str(e)) == e
    assert e.degree() == 5
    assert e.names() == {"M1", "M3", "M5"}
    for bad in ["(M1,M3", "M1 M3", "(M1,M3)_", "M1^", "M1 $"]:
        with pytest.raises(ParseError):
            parse_covariant(bad)


def test_basis_validation():
    orders = {"M1": 8, "M3": 4}
    CovariantMonomialBasis.parse("(M1,M1)_4; (M1,M3)_2; M3^2").validate(orders)
    with pytest.raises(DomainError):
        CovariantMonomialBasis.parse("(M1,M1)_3").validate(orders)
    with pytest.raises(DomainError):
        CovariantMonomialBasis.parse("(M1,M3)_5").validate(orders)
    with pytest.raises(DomainError):
        CovariantMonomialBasis.parse("M1; M3").validate(orders)
    with pytest.raises(DomainError):
        CovariantMonomialBasis.parse("M7").validate(orders)


# -- undetermined coefficients ------------------------------------------------

def test_xi_d4():
    sol = derive_relation(XI_D4_BASIS, 4, normalize=(0, 25))
    assert sol.coefficients == (25, -10, -4)


def test_xi_d3():
    sol = derive_relation(XI_D3_BASIS, 3)
    assert sol.coefficients == (1, Fraction(-1, 6))


@pytest.mark.parametrize("d", range(5, 10))
def test_alpha_table_rederived(d):
    a1, a2, a3, a4 = alpha_table(d)
    assert a3 == 1
    sol = derive_relation(T5_BASIS, d, normalize=(2, 1))
    assert sol.coefficients == (a1, a2, a3, -a4)


@pytest.mark.parametrize("d", [7, 8, 9])
def test_beta_table_rederived(d):
    sol = derive_relation(T7_BASIS, d, normalize=(4, 1))
    b = beta_table(d)
    assert sol.coefficients == (b[0], b[1], b[2], b[3], b[4], -b[5])


def test_no_relation():
    rng = random.Random(0)
    basis = CovariantMonomialBasis.parse("F; G")
    fresh = lambda: {"F": random_form(3, rng), "G": random_form(3, rng)}  # noqa: E731
    with pytest.raises(NoRelationError):
        solve_undetermined(basis, [], fresh=fresh)


def test_underdetermined_relation():
    basis = CovariantMonomialBasis.parse("F; G; H")
    env = {"F": parse_form("x0"), "G": parse_form("x0"), "H": parse_form("x0")}
    with pytest.raises(UnderdeterminedRelationError) as info:
        solve_undetermined(basis, [env, env])
    assert info.value.dimension == 2


def test_pencil_assignment():
    A, B = parse_form("x0^3"), parse_form("x1^3")
    assert pencil_assignment(A, B) == {"M1": parse_form("x0^2*x1^2"), "M3": BinaryForm.constant(1)}


# -- T5 and T7 ------------------------------------------------------------------

@pytest.mark.parametrize("d", [5, 6, 7])
def test_t5_random(d):
    rng = random.Random(d)
    for _ in range(3):
        A, B = random_pencil(d, rng)
        assert t5_formula(transvectant(A, B, 1), transvectant(A, B, 3), d) == transvectant(A, B, 5)


def test_t5_monomial_pair():
    A, B = BinaryForm.monomial(5, 0), BinaryForm.monomial(5, 5)
    assert t5_formula(transvectant(A, B, 1), transvectant(A, B, 3), 5) == transvectant(A, B, 5)


def test_t5_rejects_foreign_inputs():
    rng = random.Random(3)
    A, B = random_pencil(5, rng)
    T3 = transvectant(A, B, 3) + BinaryForm.monomial(4, 0)
    with pytest.raises(ExactDivisionError):
        t5_formula(transvectant(A, B, 1), T3, 5)
    with pytest.raises(DomainError):
        t5_formula(transvectant(A, B, 1), transvectant(A, B, 3), 4)
    with pytest.raises(OrderMismatchError):
        t5_formula(transvectant(A, B, 1), BinaryForm.zero(2), 5)


@pytest.mark.parametrize("d", [7, 8])
def test_t7_random_and_chained(d):
    rng = random.Random(d)
    A, B = random_pencil(d, rng)
    T1, T3 = transvectant(A, B, 1), transvectant(A, B, 3)
    T5 = t5_formula(T1, T3, d)
    assert t7_formula(T1, T3, T5, d) == transvectant(A, B, 7)


def test_t7_needs_d7():
    with pytest.raises(DomainError):
        t7_formula(BinaryForm.zero(10), BinaryForm.zero(6), BinaryForm.zero(2), 6)


# -- resultant ------------------------------------------------------------------

@given(st.integers(1, 4).flatmap(lambda d: st.tuples(forms(d), forms(d))))
def test_sylvester_matches_sympy(AB):
    A, B = AB
    if not A.coeffs[0] or not B.coeffs[0]:
        return
    expected = sp.resultant(to_sympy(A).subs(X1, 1), to_sympy(B).subs(X1, 1), X0)
    assert sylvester_resultant(A, B) == expected


def test_sylvester_examples():
    assert abs(sylvester_resultant(parse_form("x0^3"), parse_form("x1^3"))) == 1
    assert sylvester_resultant(parse_form("x0^2"), parse_form("x1^2")) == 1
    assert sylvester_resultant(parse_form("x0^2 + x0*x1"), parse_form("x0*x1 - 3*x0^2")) == 0


def test_resultant_constant():
    assert calibrate_resultant_d3() == RESULTANT_D3_CONSTANT == Fraction(1, 3)
    T1, T3 = parse_form("x0^2*x1^2"), BinaryForm.constant(1)
    assert resultant_d3(T1, T3) == Fraction(1, 3)


def test_resultant_specialization_pair():
    A, B = parse_form("x0*x1*(x0-x1)"), parse_form("x0*(x0+x1)*(x0+2*x1)")
    got = resultant_d3(transvectant(A, B, 1), transvectant(A, B, 3))
    assert got == RESULTANT_D3_CONSTANT * sylvester_resultant(A, B)


def test_resultant_random():
    rng = random.Random(6)
    for _ in range(10):
        A, B = random_pencil(3, rng)
        got = resultant_d3(transvectant(A, B, 1), transvectant(A, B, 3))
        assert got == RESULTANT_D3_CONSTANT * sylvester_resultant(A, B)


def test_resultant_common_root():
    A, B = parse_form("x0*(x0^2 + x1^2)"), parse_form("x0*(x0 - x1)*x1")
    assert resultant_d3(transvectant(A, B, 1), transvectant(A, B, 3)) == 0


# -- Jacobian predicate --------------------------------------------------------

def test_jacobian_counterexample_d4():
    A, M = parse_form("(x0*x1)^2"), parse_form("(x0*x1)^3")
    assert not jacobian_predicate(A, M)
    assert jacobian_necessary(A, M)


def test_jacobian_d2_witness():
    A, M = parse_form("x0^2"), parse_form("x0^2 + x0*x1")
    assert jacobian_criterion_d2(A, M)
    B = jacobian_witness(A, M)
    assert transvectant(A, B, 1) == M
    assert B == parse_form("2*x0*x1 + x1^2")


def test_jacobian_zero_M():
    A = parse_form("x0^3 - x1^3")
    assert jacobian_predicate(A, BinaryForm.zero(4))


@pytest.mark.parametrize("d", [2, 3])
def test_jacobian_criteria_agree(d):
    criterion = jacobian_criterion_d2 if d == 2 else jacobian_criterion_d3
    rng = random.Random(d)
    for k in range(30):
        A = random_form(d, rng)
        if k % 2:
            M = transvectant(A, random_form(d, rng), 1)
            assert jacobian_predicate(A, M)
        else:
            M = random_form(2 * d - 2, rng)
        assert criterion(A, M) == jacobian_predicate(A, M)
        if jacobian_predicate(A, M):
            assert jacobian_necessary(A, M)


def test_jacobian_orders():
    with pytest.raises(OrderMismatchError):
        jacobian_criterion_d3(parse_form("x0^2"), parse_form("x0^4"))
    with pytest.raises(OrderMismatchError):
        jacobian_predicate(parse_form("x0^2"), parse_form("x0^4"))


# -- minimal equation ------------------------------------------------------------

def test_minimal_equation_monomial_pair():
    R = minimal_equation_residual_d4(parse_form("x0^4"), parse_form("x1^4"))
    assert R.is_zero() and R.order == 10


def test_minimal_equation_random():
    rng = random.Random(8)
    for _ in range(5):
        R = minimal_equation_residual_d4(*random_pencil(4, rng))
        assert R.is_zero()
        assert R.leading_coefficient() == 0


def test_q_covariants():
    rng = random.Random(10)
    T1 = random_form(6, rng)
    q = q_covariants_d6(T1)
    q2 = q_covariants_d6(T1.scale(2))
    for name, Q in q.items():
        a, b = int(name[1]), int(name[2])
        assert Q.order == b
        assert q2[name] == Q.scale(2 ** a)
    assert q_covariants_d6(parse_form("x0^6"))["q20"].is_zero()


def test_lambda_orders():
    rng = random.Random(12)
    lams = lambda_covariants_d4(random_form(6, rng))
    assert [L.order for L in lams] == [2, 4, 6, 8, 10]
    assert lams[0].is_zero()


def test_catalan():
    assert catalan_rho(4) == 5
    assert catalan_rho(1) == 1
    assert catalan_rho(3) == 2
    assert [catalan_rho(d) for d in range(1, 8)] == [1, 1, 2, 5, 14, 42, 132]
    with pytest.raises(DomainError):
        catalan_rho(0)
