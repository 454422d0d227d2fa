"""Identities among the odd transvectants of a pencil: undetermined
coefficients, closed forms for T5 and T7, the cubic resultant, the Jacobian
predicate and the quartic minimal equation for T3."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .covexpr import parse_basis
from .errors import (
    DomainError,
    ExactDivisionError,
    NoRelationError,
    OrderMismatchError,
    UnderdeterminedRelationError,
)
from .forms import BinaryForm, binom, exact_divide
from .linalg import LinearMapQ
from .randforms import random_pencil
from .transvectants import transvectant


# -- undetermined coefficients ----------------------------------------------

@dataclass(frozen=True)
class CovariantMonomialBasis:
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise DomainError("empty covariant basis")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> "CovariantMonomialBasis":
        return cls(tuple(parse_basis(text)))

    def names(self) -> set:
        return set().union(*(e.names() for e in self.entries))

    def validate(self, orders: Mapping[str, int]) -> int:
        """Check every entry and return the common target order."""
        targets = set()
        for e in self.entries:
            e.check(orders)
            targets.add(e.order(orders))
        if len(targets) != 1:
            raise DomainError(f"basis entries have different orders {sorted(targets)}")
        return targets.pop()

    def evaluate(self, env: Mapping[str, BinaryForm]) -> list:
        return [e.evaluate(env) for e in self.entries]

    def __str__(self):
        return "; ".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class RelationSolution:
    basis: CovariantMonomialBasis
    coefficients: tuple

    def combination(self, env: Mapping[str, BinaryForm]) -> BinaryForm:
        values = self.basis.evaluate(env)
        total = BinaryForm.zero(values[0].order)
        for c, v in zip(self.coefficients, values):
            total = total + v.scale(c)
        return total

    def __str__(self):
        return " + ".join(f"({c})*{e}" for c, e in zip(self.coefficients, self.basis.entries))


def _rows(basis: CovariantMonomialBasis, env) -> list:
    values = basis.evaluate(env)
    orders = {v.order for v in values}
    if len(orders) != 1:
        raise DomainError("basis entries evaluate to different orders")
    return [[v.coeffs[k] for v in values] for k in range(orders.pop() + 1)]


def solve_undetermined(basis: CovariantMonomialBasis,
                       specializations: Sequence[Mapping[str, BinaryForm]],
                       fresh: Callable[[], Mapping[str, BinaryForm]] | None = None,
                       verify_trials: int = 5,
                       max_extra: int = 20,
                       normalize: tuple | None = None) -> RelationSolution:
    """Find the unique (projective) linear relation among the basis entries.

    Each specialization contributes the coefficient equations of
    sum_k c_k entry_k = 0.  When ``fresh`` is given it supplies additional
    assignments until the solution space is one-dimensional, and the result
    is checked on ``verify_trials`` further assignments.  ``normalize`` is
    ``(index, value)``; by default the first nonzero coefficient becomes 1.
    """
    rows = []
    for env in specializations:
        rows.extend(_rows(basis, env))
    extra = 0
    while True:
        kernel = LinearMapQ(len(rows), len(basis.entries), tuple(map(tuple, rows))).kernel() \
            if rows else [[Fraction(int(i == j)) for i in range(len(basis.entries))]
                          for j in range(len(basis.entries))]
        if len(kernel) <= 1 or fresh is None or extra >= max_extra:
            break
        rows.extend(_rows(basis, fresh()))
        extra += 1
    if not kernel:
        raise NoRelationError("no linear relation among the basis entries")
    if len(kernel) > 1:
        raise UnderdeterminedRelationError(
            f"solution space has dimension {len(kernel)}; add specializations", len(kernel))
    v = kernel[0]
    if normalize is None:
        k = next(i for i, x in enumerate(v) if x)
        target = Fraction(1)
    else:
        k, target = normalize
        if not v[k]:
            raise DomainError(f"cannot normalize: coefficient {k} is zero")
    scale = Fraction(target) / v[k]
    solution = RelationSolution(basis, tuple(x * scale for x in v))
    if fresh is not None:
        for _ in range(verify_trials):
            if solution.combination(fresh()):
                raise NoRelationError("derived relation fails on a fresh specialization")
    return solution


def pencil_assignment(A: BinaryForm, B: BinaryForm) -> dict:
    """{"M1": T1, "M3": T3, ...} for all odd indices up to the order."""
    d = A.order
    return {f"M{2 * r + 1}": transvectant(A, B, 2 * r + 1) for r in range((d - 1) // 2 + 1)}


def monomial_pencils(d: int) -> list:
    """The four monomial pencils used for the T5 coefficients."""
    m = BinaryForm.monomial
    return [
        (m(d, 0), m(d, d)),
        (m(d, 1), m(d, d)),
        (m(d, 2), m(d, d)),
        (m(d, 1), m(d, d - 1)),
    ]


def derive_relation(basis: CovariantMonomialBasis | str, d: int,
                    pencils: Sequence | None = None, seed: int = 0,
                    normalize: tuple | None = None) -> RelationSolution:
    """Undetermined coefficients for a covariant relation among (A, B)_{2r+1}."""
    if isinstance(basis, str):
        basis = CovariantMonomialBasis.parse(basis)
    orders = {f"M{2 * r + 1}": 2 * d - 4 * r - 2 for r in range((d - 1) // 2 + 1)}
    basis.validate(orders)
    rng = random.Random(seed)
    if pencils is None:
        pencils = monomial_pencils(d) if d >= 3 else []
    specs = [pencil_assignment(A, B) for A, B in pencils]
    return solve_undetermined(basis, specs, fresh=lambda: pencil_assignment(*random_pencil(d, rng)),
                              normalize=normalize)


T5_BASIS = "(M1,M1)_4; (M1,M3)_2; M3^2; M1*M5"
T7_BASIS = "(M1,M1)_6; (M1,M3)_4; (M1,M5)_2; (M3,M3)_2; M3*M5; M1*M7"
XI_D4_BASIS = "(M1,M1)_4; (M1,M3)_2; M3^2"
XI_D3_BASIS = "(M1,M1)_4; M3^2"


# -- T5 and T7 ---------------------------------------------------------------

def alpha_table(d: int) -> tuple:
    """(alpha_1, alpha_2, alpha_3, alpha_4) of the T5 relation
    alpha_1 (T1,T1)_4 + alpha_2 (T1,T3)_2 + alpha_3 T3^2 - alpha_4 T1 T5 = 0."""
    F = Fraction
    return (
        F(-2 * (2 * d - 3) ** 2, d * (d - 2)),
        F(4 * (2 * d - 3) * (d - 3), d * (d - 2)),
        F(1),
        F((d - 3) * (d - 4) * (2 * d - 3) ** 2, d * (2 * d - 5) * (2 * d - 7) * (d - 2)),
    )


def beta_table(d: int) -> tuple:
    """(beta_1, ..., beta_6) of the T7 relation
    beta_1 (T1,T1)_6 + beta_2 (T1,T3)_4 + beta_3 (T1,T5)_2 + beta_4 (T3,T3)_2
    + beta_5 T3 T5 - beta_6 T1 T7 = 0."""
    F = Fraction
    return (
        F(-8 * (2 * d - 5) * (2 * d - 7) * (2 * d - 3), d * (d - 1) * (4 * d - 13)),
        F(-60 * (2 * d - 7) * (2 * d - 5), d * (d - 1) * (4 * d - 13)),
        F(12 * (2 * d - 3) * (d - 5), d * (4 * d - 13)),
        F(20 * (2 * d - 5) * (2 * d - 7) * (d - 3), (d - 1) * (4 * d - 13) * (2 * d - 3)),
        F(1),
        F((d - 5) * (d - 6) * (2 * d - 3) * (2 * d - 5), d * (d - 1) * (2 * d - 9) * (2 * d - 11)),
    )


def _check_order(F: BinaryForm, order: int, name: str):
    if F.order != order:
        raise OrderMismatchError(f"{name} must have order {order}, got {F.order}")


def _divide_by_T1(num: BinaryForm, T1: BinaryForm) -> BinaryForm:
    try:
        return exact_divide(num, T1)
    except ExactDivisionError as exc:
        raise ExactDivisionError(
            "T1 does not divide the numerator: inputs do not come from a pencil", exc.remainder) from exc


def t5_formula(T1: BinaryForm, T3: BinaryForm, d: int) -> BinaryForm:
    """(A, B)_5 from T1 = (A, B)_1 and T3 = (A, B)_3, for d >= 5."""
    if d < 5:
        raise DomainError(f"the T5 formula needs d >= 5, got {d}")
    _check_order(T1, 2 * d - 2, "T1")
    _check_order(T3, 2 * d - 6, "T3")
    if T1.is_zero():
        raise DomainError("T1 must be nonzero")
    a1, a2, a3, a4 = alpha_table(d)
    num = (transvectant(T1, T1, 4).scale(a1 / a4)
           + transvectant(T1, T3, 2).scale(a2 / a4)
           + (T3 * T3).scale(a3 / a4))
    return _divide_by_T1(num, T1)


def t7_formula(T1: BinaryForm, T3: BinaryForm, T5: BinaryForm, d: int) -> BinaryForm:
    """(A, B)_7 from T1, T3, T5, for d >= 7."""
    if d < 7:
        raise DomainError(f"the T7 formula needs d >= 7, got {d}")
    _check_order(T1, 2 * d - 2, "T1")
    _check_order(T3, 2 * d - 6, "T3")
    _check_order(T5, 2 * d - 10, "T5")
    if T1.is_zero():
        raise DomainError("T1 must be nonzero")
    b1, b2, b3, b4, b5, b6 = beta_table(d)
    num = (transvectant(T1, T1, 6).scale(b1 / b6)
           + transvectant(T1, T3, 4).scale(b2 / b6)
           + transvectant(T1, T5, 2).scale(b3 / b6)
           + transvectant(T3, T3, 2).scale(b4 / b6)
           + (T3 * T5).scale(b5 / b6))
    return _divide_by_T1(num, T1)


# -- resultants ----------------------------------------------------------------

def sylvester_matrix(A: BinaryForm, B: BinaryForm) -> LinearMapQ:
    m, n = A.order, B.order
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + list(A.coeffs) + [0] * (size - m - 1 - k))
    for k in range(m):
        rows.append([0] * k + list(B.coeffs) + [0] * (size - n - 1 - k))
    return LinearMapQ.from_rows(rows)


def sylvester_resultant(A: BinaryForm, B: BinaryForm) -> Fraction:
    """Determinant of the Sylvester matrix of the coefficient sequences."""
    if A.order + B.order == 0:
        return Fraction(1)
    return sylvester_matrix(A, B).det()


def resultant_d3(T1: BinaryForm, T3: BinaryForm) -> Fraction:
    """T3 (T1,T1)_4 - 6 (T1,(T1,T1)_2)_4; a constant multiple of Res(A, B)."""
    _check_order(T1, 4, "T1")
    _check_order(T3, 0, "T3")
    val = (T3 * transvectant(T1, T1, 4)) - transvectant(T1, transvectant(T1, T1, 2), 4).scale(6)
    return val.leading_coefficient()


def calibrate_resultant_d3() -> Fraction:
    A, B = BinaryForm.monomial(3, 0), BinaryForm.monomial(3, 3)
    return resultant_d3(transvectant(A, B, 1), transvectant(A, B, 3)) / sylvester_resultant(A, B)


# calibrated on (x0^3, x1^3); frozen
RESULTANT_D3_CONSTANT = Fraction(1, 3)


# -- the Jacobian predicate --------------------------------------------------

def _jacobian_orders(A: BinaryForm, M: BinaryForm):
    d = A.order
    if d < 1:
        raise DomainError("A must have order >= 1")
    _check_order(M, 2 * d - 2, "M")
    return d


def jacobian_witness(A: BinaryForm, M: BinaryForm):
    """Some B with (A, B)_1 = M, or None."""
    d = _jacobian_orders(A, M)
    system = LinearMapQ.of_linear_map(lambda B: transvectant(A, B, 1), d)
    x = system.solve(M.coeffs)
    return None if x is None else BinaryForm(d, tuple(x))


def jacobian_predicate(A: BinaryForm, M: BinaryForm) -> bool:
    """Whether (A, B)_1 = M has a solution B of order d."""
    return jacobian_witness(A, M) is not None


def jacobian_necessary(A: BinaryForm, M: BinaryForm) -> bool:
    """A divides (A, M)_2; necessary for the predicate in every order."""
    _jacobian_orders(A, M)
    try:
        exact_divide(transvectant(A, M, 2), A)
    except ExactDivisionError:
        return False
    return True


def jacobian_criterion_d2(A: BinaryForm, M: BinaryForm) -> bool:
    _check_order(A, 2, "A")
    _check_order(M, 2, "M")
    return transvectant(A, M, 2).is_zero()


def jacobian_criterion_d3(A: BinaryForm, M: BinaryForm) -> bool:
    _check_order(A, 3, "A")
    _check_order(M, 4, "M")
    return transvectant(transvectant(A, M, 2), A, 1).is_zero()


# -- the minimal equation of T3 for quartics -----------------------------------

def q_covariants_d6(T1: BinaryForm) -> dict:
    """Covariants q_ab of an order-6 form, of degree a and order b."""
    _check_order(T1, 6, "T1")
    q24 = transvectant(T1, T1, 4)
    q32 = transvectant(T1, q24, 4)
    return {
        "q20": transvectant(T1, T1, 6),
        "q24": q24,
        "q28": transvectant(T1, T1, 2),
        "q32": q32,
        "q36": transvectant(T1, q24, 2),
        "q38": transvectant(T1, q24, 1),
        "q44": transvectant(T1, q32, 2),
    }


def lambda_covariants_d4(T1: BinaryForm) -> list:
    """[Lambda_1, ..., Lambda_5]; Lambda_i has degree i and order 2i."""
    q = q_covariants_d6(T1)
    F = Fraction
    lam1 = BinaryForm.zero(2)
    lam2 = q["q24"].scale(F(-125, 8))
    lam3 = q["q36"].scale(F(625, 24)) + (T1 * q["q20"]).scale(F(125, 36))
    lam4 = ((q["q24"] * q["q24"]).scale(F(3125, 48))
            - (q["q20"] * q["q28"]).scale(F(625, 96))
            - (T1 * q["q32"]).scale(F(3125, 96)))
    lam5 = ((T1 * q["q44"]).scale(F(3125, 64))
            + (q["q32"] * q["q28"]).scale(F(3125, 64))
            - (q["q36"] * q["q24"]).scale(F(3125, 16))
            - (T1 * q["q20"] * q["q24"]).scale(F(3125, 192)))
    return [lam1, lam2, lam3, lam4, lam5]


def minimal_equation_residual_d4(A: BinaryForm, B: BinaryForm) -> BinaryForm:
    """T3^5 + sum_i Lambda_i T3^(5-i) for quartics A, B; identically zero."""
    _check_order(A, 4, "A")
    _check_order(B, 4, "B")
    T1, T3 = transvectant(A, B, 1), transvectant(A, B, 3)
    total = T3 ** 5
    for i, lam in enumerate(lambda_covariants_d4(T1), start=1):
        total = total + lam * T3 ** (5 - i)
    return total


def catalan_rho(d: int) -> int:
    """(1/d) C(2d-2, d-1)."""
    if d < 1:
        raise DomainError("rho(d) needs d >= 1")
    return binom(2 * d - 2, d - 1) // d
