"""The Bezoutiant of a pencil and its Taylor series in omega."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneratePencilError, DomainError, ExactDivisionError, OrderMismatchError
from .forms import BiForm, BinaryForm, binom, exact_divide, specialize_y_to_x
from .transvectants import sym_polarize, transvectant


@dataclass(frozen=True)
class Pencil:
    """Two linearly independent forms of the same order."""

    A: BinaryForm
    B: BinaryForm

    def __post_init__(self):
        if self.A.order != self.B.order:
            raise OrderMismatchError(f"pencil forms have orders {self.A.order} and {self.B.order}")
        if self.A.order < 1:
            raise DomainError("pencil forms must have order >= 1")
        if transvectant(self.A, self.B, 1).is_zero():
            raise DegeneratePencilError("A and B are linearly dependent")

    @property
    def d(self) -> int:
        return self.A.order

    def T(self, i: int) -> BinaryForm:
        return transvectant(self.A, self.B, i)


@dataclass(frozen=True)
class TransvectantSeries:
    """U_1, U_3, ... with order(U_{2r+1}) = 2(d - 2r - 1)."""

    d: int
    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        if len(terms) != series_length(self.d):
            raise OrderMismatchError(
                f"d = {self.d} needs {series_length(self.d)} terms, got {len(terms)}")
        for r, U in enumerate(terms):
            if U.order != 2 * (self.d - 2 * r - 1):
                raise OrderMismatchError(
                    f"term {2 * r + 1} has order {U.order}, expected {2 * (self.d - 2 * r - 1)}")
        object.__setattr__(self, "terms", terms)

    def to_json(self) -> dict:
        return {"d": self.d, "terms": [U.to_json() for U in self.terms]}

    @classmethod
    def from_json(cls, data) -> "TransvectantSeries":
        return cls(int(data["d"]), tuple(BinaryForm.from_json(t) for t in data["terms"]))


def series_length(d: int) -> int:
    return (d - 1) // 2 + 1


def _unpack(A, B=None):
    if isinstance(A, Pencil):
        return A.A, A.B
    return A, B


def bezoutiant(A, B=None) -> BiForm:
    """(A(x)B(y) - B(x)A(y)) / omega, of bi-order (d-1, d-1).

    Accepts a ``Pencil`` or two raw forms; dependent forms give zero.
    """
    A, B = _unpack(A, B)
    if A.order != B.order:
        raise OrderMismatchError(f"orders differ: {A.order} vs {B.order}")
    if A.order < 1:
        raise DomainError("the Bezoutiant needs order >= 1")
    num = BiForm.outer(A, B) - BiForm.outer(B, A)
    try:
        return exact_divide(num, BiForm.omega())
    except ExactDivisionError as exc:  # pragma: no cover - cannot happen for valid input
        raise AssertionError("omega does not divide the Bezoutiant numerator") from exc


def c_constant(d: int, r: int) -> Fraction:
    """2 * C(d, 2r+1)^2 / C(2d-2r, 2r+1)."""
    if not 0 <= r <= (d - 1) // 2:
        raise DomainError(f"c_r needs 0 <= r <= {(d - 1) // 2}, got r = {r}")
    return Fraction(2 * binom(d, 2 * r + 1) ** 2, binom(2 * d - 2 * r, 2 * r + 1))


def odd_series(A, B=None) -> TransvectantSeries:
    """The odd transvectants (A, B)_1, (A, B)_3, ..."""
    A, B = _unpack(A, B)
    d = A.order
    return TransvectantSeries(d, tuple(transvectant(A, B, 2 * r + 1) for r in range(series_length(d))))


def taylor_decompose(U: BiForm, d: int) -> TransvectantSeries:
    """The unique U_bullet with U = sum_r c_r omega^(2r) (U_{2r+1})^sigma.

    Peels one term at a time: restrict to the diagonal y = x, subtract its
    symmetric polarization and divide by omega^2.
    """
    if U.bi_order != (d - 1, d - 1):
        raise OrderMismatchError(f"expected bi-order {(d - 1, d - 1)}, got {U.bi_order}")
    if not U.is_symmetric():
        raise DomainError("biform is not symmetric in x and y")
    omega2 = BiForm.omega(2)
    terms = []
    rest = U
    for r in range(series_length(d)):
        term = specialize_y_to_x(rest).scale(1 / c_constant(d, r))
        terms.append(term)
        rest = rest - sym_polarize(term).scale(c_constant(d, r))
        if r + 1 < series_length(d):
            try:
                rest = exact_divide(rest, omega2)
            except ExactDivisionError as exc:
                raise DomainError("omega^2 does not divide the remainder; input is not a valid symmetric biform") from exc
    if not rest.is_zero():
        raise DomainError("nonzero remainder after the last Taylor term")
    return TransvectantSeries(d, tuple(terms))


def taylor_reconstruct(S: TransvectantSeries) -> BiForm:
    """sum_r c_r omega^(2r) (U_{2r+1})^sigma."""
    d = S.d
    total = BiForm.zero(d - 1, d - 1)
    for r, U in enumerate(S.terms):
        total = total + (BiForm.omega(2 * r) * sym_polarize(U)).scale(c_constant(d, r))
    return total
