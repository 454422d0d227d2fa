"""Evectants, the map sigma_{A^B}, and the generic reduction formula that
recovers B (modulo A) from A and the Bezoutiant R(A, B)."""

from __future__ import annotations

import enum
from fractions import Fraction

from .bezoutiant import Pencil, c_constant, taylor_decompose
from .errors import DomainError, OrderMismatchError, SingularInvariantError
from .forms import BiForm, BinaryForm, binom
from .transvectants import transvectant


class InvariantSpec(enum.Enum):
    """Which invariant J of A drives the reduction.

    EVEN_DEG2: J = (A, A)_d for even d.
    ODD_DEG4:  J = ((A, A)_{d-1}, (A, A)_{d-1})_2 for odd d.
    """

    EVEN_DEG2 = "deg2"
    ODD_DEG4 = "deg4"

    @property
    def degree(self) -> int:
        return 2 if self is InvariantSpec.EVEN_DEG2 else 4

    @classmethod
    def for_order(cls, d: int) -> "InvariantSpec":
        return cls.EVEN_DEG2 if d % 2 == 0 else cls.ODD_DEG4

    def check(self, A: BinaryForm):
        d = A.order
        if d < 1:
            raise DomainError("invariants need order >= 1")
        if (d % 2 == 0) != (self is InvariantSpec.EVEN_DEG2):
            raise OrderMismatchError(f"invariant {self.value} does not apply to order {d}")


def invariant_J(spec: InvariantSpec, A: BinaryForm) -> Fraction:
    spec.check(A)
    d = A.order
    if spec is InvariantSpec.EVEN_DEG2:
        return transvectant(A, A, d).leading_coefficient()
    Q = transvectant(A, A, d - 1)
    return transvectant(Q, Q, 2).leading_coefficient()


def _weighted_unit(d: int, q: int) -> BinaryForm:
    # the form whose binomial-weighted coefficient a_q is 1 and all others 0
    return BinaryForm.monomial(d, q, binom(d, q))


def invariant_gradient(spec: InvariantSpec, A: BinaryForm) -> list:
    """[dJ/da_0, ..., dJ/da_d] in the coordinates A = sum C(d,p) a_p x0^(d-p) x1^p.

    J(A) = beta(A, A) with beta symmetric bilinear (degree 2), or
    J(A) = (Q, Q)_2 with Q = (A, A)_{d-1} symmetric in A (degree 4); the
    derivatives are the corresponding polarizations.
    """
    spec.check(A)
    d = A.order
    units = [_weighted_unit(d, q) for q in range(d + 1)]
    if spec is InvariantSpec.EVEN_DEG2:
        return [2 * transvectant(A, u, d).leading_coefficient() for u in units]
    Q = transvectant(A, A, d - 1)
    return [4 * transvectant(Q, transvectant(A, u, d - 1), 2).leading_coefficient() for u in units]


def evectant(spec: InvariantSpec, A: BinaryForm) -> BinaryForm:
    """Ev_J = (-1)^d / n * sum_q (-1)^q dJ/da_q x0^q x1^(d-q)."""
    d = A.order
    grad = invariant_gradient(spec, A)
    # x0^q x1^(d-q) has plain index d - q
    coeffs = [Fraction(0)] * (d + 1)
    for q, g in enumerate(grad):
        coeffs[d - q] = Fraction((-1) ** (d + q), spec.degree) * g
    return BinaryForm(d, tuple(coeffs))


def sigma_apply(P: Pencil, F: BinaryForm) -> BinaryForm:
    """sigma(F) = (F, B)_d A - (F, A)_d B."""
    d = P.d
    if F.order != d:
        raise OrderMismatchError(f"F must have order {d}, got {F.order}")
    return (P.A.scale(transvectant(F, P.B, d).leading_coefficient())
            - P.B.scale(transvectant(F, P.A, d).leading_coefficient()))


def sigma_from_series(F: BinaryForm, terms, d: int) -> BinaryForm:
    """sum_r c_r (F, T_{2r+1})_{d-2r-1}."""
    total = BinaryForm.zero(d)
    for r, T in enumerate(terms):
        total = total + transvectant(F, T, d - 2 * r - 1).scale(c_constant(d, r))
    return total


def _resolve(spec, A):
    if spec is None or spec == "auto":
        return InvariantSpec.for_order(A.order)
    if isinstance(spec, str):
        return InvariantSpec(spec)
    return spec


def reduce(spec, A: BinaryForm, R: BiForm) -> BinaryForm:
    """beta(A, R) = -(1/J) sum_r c_r (Ev_J, T_{2r+1})_{d-2r-1}.

    For R = R(A, B) this equals B - ((Ev_J, B)_d / J) A.
    """
    spec = _resolve(spec, A)
    d = A.order
    J = invariant_J(spec, A)
    if J == 0:
        raise SingularInvariantError(
            f"J(A) = 0: A lies on the hypersurface {{J = 0}} for invariant {spec.value}")
    series = taylor_decompose(R, d)
    return sigma_from_series(evectant(spec, A), series.terms, d).scale(-1 / J)


def reduce_d2_special(A: BinaryForm, T1: BinaryForm) -> BinaryForm:
    """-(2 / (A, A)_2) (A, T1)_1 for quadratic A."""
    if A.order != 2 or T1.order != 2:
        raise OrderMismatchError("the quadratic reduction needs A and T1 of order 2")
    J = transvectant(A, A, 2).leading_coefficient()
    if J == 0:
        raise SingularInvariantError("(A, A)_2 = 0")
    return transvectant(A, T1, 1).scale(Fraction(-2) / J)
