"""Exact linear algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .forms import BinaryForm, as_rational


@dataclass(frozen=True)
class LinearMapQ:
    """Dense rational matrix.  ``domain_order`` / ``codomain_order`` record the
    form orders when the matrix represents a map between spaces of forms."""

    rows: int
    cols: int
    entries: tuple
    domain_order: int | None = None
    codomain_order: int | None = None
    _rref: list = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], **meta) -> "LinearMapQ":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows), **meta)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None, **meta) -> "LinearMapQ":
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls(nrows, len(columns),
                   tuple(tuple(c[i] for c in columns) for i in range(nrows)), **meta)

    @classmethod
    def of_linear_map(cls, fn, domain_order: int) -> "LinearMapQ":
        """Matrix of a linear map on forms of ``domain_order`` in the monomial basis."""
        images = [fn(BinaryForm.monomial(domain_order, i)) for i in range(domain_order + 1)]
        codomain = images[0].order
        return cls.from_columns([im.coeffs for im in images], nrows=max(codomain + 1, 0),
                                domain_order=domain_order, codomain_order=codomain)

    def apply(self, v: Sequence) -> list:
        return [sum((a * as_rational(x) for a, x in zip(row, v)), Fraction(0)) for row in self.entries]

    def rref(self):
        """Reduced row echelon form and pivot column list."""
        if self._rref is None:
            object.__setattr__(self, "_rref", _rref([list(r) for r in self.entries], self.cols))
        R, pivots = self._rref
        return [list(r) for r in R], list(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list:
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -R[r][f]
            basis.append(v)
        return basis

    def solve(self, b: Sequence):
        """One solution x of M x = b, or None when the system is inconsistent."""
        b = [as_rational(x) for x in b]
        aug = [list(row) + [bi] for row, bi in zip(self.entries, b)]
        R, pivots = _rref(aug, self.cols + 1)
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = R[r][self.cols]
        return x

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        sign = 1
        out = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                sign = -sign
            piv = a[c][c]
            out *= piv
            for r in range(c + 1, n):
                f = a[r][c] / piv
                if f:
                    for k in range(c, n):
                        a[r][k] -= f * a[c][k]
        return sign * out


def _rref(a: list, ncols: int):
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def kernel_basis(M: LinearMapQ) -> list:
    """Basis of ker M; empty iff M is injective."""
    return M.kernel()


def row_reduce_vectors(vectors: Sequence[Sequence]) -> list:
    """Canonical basis (reduced echelon rows) of the span of ``vectors``."""
    if not vectors:
        return []
    R, _ = _rref([[as_rational(x) for x in v] for v in vectors], len(vectors[0]))
    return R


def rank_of_forms(forms: Sequence[BinaryForm]) -> int:
    if not forms:
        return 0
    return LinearMapQ.from_rows([f.coeffs for f in forms]).rank()
