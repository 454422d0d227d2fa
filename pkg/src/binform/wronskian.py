"""Wronskians, the second order operator psi_{M,N}, pencil recovery and the
realizability covariants Phi_0 .. Phi_d."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .bezoutiant import Pencil
from .errors import DomainError, KernelDimensionError, NotRealizableError, OrderMismatchError
from .forms import BinaryForm
from .linalg import LinearMapQ, row_reduce_vectors
from .transvectants import transvectant


def wronskian(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Determinant of the (q-1)-th partial derivatives of q forms of order p.

    Row i, column j holds d^(q-1) F_i / dx0^(q-j) dx1^(j-1).  The result has
    order q(p-q+1) and vanishes iff the forms are linearly dependent.
    """
    forms = list(forms)
    q = len(forms)
    if q == 0:
        return BinaryForm.constant(1)
    p = forms[0].order
    if any(F.order != p for F in forms):
        raise OrderMismatchError("Wronskian arguments must share one order")
    if q > p + 1:
        raise DomainError(f"Wronskian of {q} forms of order {p} needs q <= p + 1")
    entries = [[F.diff(q - 1 - j, j) for j in range(q)] for F in forms]
    return _det_of_forms(entries)


def _det_of_forms(entries) -> BinaryForm:
    # Laplace expansion along rows, memoized on the set of remaining columns.
    q = len(entries)
    order = sum(entries[i][0].order for i in range(q))

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> BinaryForm:
        if row == q:
            return BinaryForm.constant(1)
        sub_order = sum(entries[i][0].order for i in range(row, q))
        total = BinaryForm.zero(sub_order)
        for k, c in enumerate(sorted(cols)):
            a = entries[row][c]
            if a.is_zero():
                continue
            term = a * minor(row + 1, cols - {c})
            total = total - term if k % 2 else total + term
        return total

    result = minor(0, frozenset(range(q)))
    assert result.order == order
    return result


@dataclass(frozen=True)
class OdeParams:
    """Parameters (M, N) of the operator psi_{M,N} on order-d forms.

    M has order 2d-2 and must be nonzero; N has order 2d-6 (the zero form of
    negative order when d < 3).
    """

    d: int
    M: BinaryForm
    N: BinaryForm

    def __post_init__(self):
        if self.d < 2:
            raise DomainError(f"psi needs d >= 2, got {self.d}")
        if self.M.order != 2 * self.d - 2:
            raise OrderMismatchError(f"M must have order {2 * self.d - 2}, got {self.M.order}")
        if self.N.order != 2 * self.d - 6:
            if self.d < 3 and self.N.is_zero():
                object.__setattr__(self, "N", BinaryForm.zero(2 * self.d - 6))
            else:
                raise OrderMismatchError(f"N must have order {2 * self.d - 6}, got {self.N.order}")
        if self.M.is_zero():
            raise DomainError("M must be nonzero")

    @classmethod
    def from_pencil(cls, A: BinaryForm, B: BinaryForm) -> "OdeParams":
        return cls(A.order, transvectant(A, B, 1), transvectant(A, B, 3))

    def scaled(self, t) -> "OdeParams":
        return OdeParams(self.d, self.M.scale(t), self.N.scale(t))


def psi_ratio(d: int) -> Fraction:
    """(d-2)/(4d-6)."""
    return Fraction(d - 2, 4 * d - 6)


def psi_apply(p: OdeParams, F: BinaryForm) -> BinaryForm:
    """psi_{M,N}(F) = (M, F)_2 - (d-2)/(4d-6) N F, of order 3d-6."""
    if F.order != p.d:
        raise OrderMismatchError(f"F must have order {p.d}, got {F.order}")
    return transvectant(p.M, F, 2) - (p.N * F).scale(psi_ratio(p.d))


def psi_matrix(p: OdeParams) -> LinearMapQ:
    return LinearMapQ.of_linear_map(lambda F: psi_apply(p, F), p.d)


def psi_kernel(p: OdeParams) -> list:
    """Basis of the kernel of psi_{M,N} on S_d, as forms in reduced echelon shape."""
    basis = row_reduce_vectors(psi_matrix(p).kernel())
    return [BinaryForm(p.d, tuple(v)) for v in basis]


def wronskian_identity_residual(A: BinaryForm, B: BinaryForm, F: BinaryForm) -> BinaryForm:
    """W(A,B,F)/(d^2-d)^3 - [(T1, F)_2 - (d-2)/(4d-6) T3 F]; identically zero."""
    d = A.order
    if B.order != d or F.order != d:
        raise OrderMismatchError("A, B, F must share one order")
    if d < 2:
        raise DomainError("the Wronskian identity needs d >= 2")
    W = wronskian([A, B, F]).scale(Fraction(1, (d * d - d) ** 3))
    rhs = transvectant(transvectant(A, B, 1), F, 2) - (transvectant(A, B, 3) * F).scale(psi_ratio(d))
    return W - rhs


def pencil_membership(P: Pencil, F: BinaryForm) -> bool:
    """True iff F lies in the span of the pencil, decided by psi_{T1,T3}(F) = 0."""
    p = OdeParams.from_pencil(P.A, P.B)
    return psi_apply(p, F).is_zero()


def recover_pencil(p: OdeParams):
    """Return (Pencil, lam) with M = lam (A, B)_1 and N = lam (A, B)_3.

    A, B is the reduced echelon basis of ker psi_{M,N}, so lam is canonical.
    """
    kernel = psi_kernel(p)
    if len(kernel) != 2:
        raise KernelDimensionError(
            f"kernel of psi has dimension {len(kernel)}, need exactly 2", len(kernel))
    A, B = kernel
    T1 = transvectant(A, B, 1)
    lam = p.M.ratio_to(T1)
    if lam is None or lam == 0:
        raise NotRealizableError("M is not a multiple of (A, B)_1 for the kernel basis")
    if p.N != transvectant(A, B, 3).scale(lam):
        raise NotRealizableError("N is not the matching multiple of (A, B)_3")
    return Pencil(A, B), lam


def w_forms(p: OdeParams) -> list:
    """w_i = (-1)^i / (i!(d-i)!) * Wronskian of psi(x0^s x1^(d-s)), s != i."""
    d = p.d
    if d < 3:
        raise DomainError("the covariants Phi_r are defined for d >= 3")
    # x0^s x1^(d-s) is the monomial with plain index d - s
    images = [psi_apply(p, BinaryForm.monomial(d, d - s)) for s in range(d + 1)]
    out = []
    for i in range(d + 1):
        W = wronskian([images[s] for s in range(d + 1) if s != i])
        out.append(W.scale(Fraction((-1) ** i, factorial(i) * factorial(d - i))))
    return out


def phi_covariants(p: OdeParams) -> list:
    """[Phi_0, ..., Phi_d] with Phi_r = sum_i (w_i, x0^i x1^(d-i))_r."""
    d = p.d
    w = w_forms(p)
    monos = [BinaryForm.monomial(d, d - i) for i in range(d + 1)]
    out = []
    for r in range(d + 1):
        total = BinaryForm.zero(d * (2 * d - 4) - 2 * r)
        for wi, mono in zip(w, monos):
            total = total + transvectant(wi, mono, r)
        out.append(total)
    return out


def phi_covariant(p: OdeParams, r: int) -> BinaryForm:
    if not 0 <= r <= p.d:
        raise DomainError(f"Phi_r needs 0 <= r <= {p.d}, got {r}")
    return phi_covariants(p)[r]


def realizable(p: OdeParams) -> bool:
    """True iff (M, N) = ((A,B)_1, (A,B)_3) for some A, B: all Phi_r vanish."""
    return all(Phi.is_zero() for Phi in phi_covariants(p))
