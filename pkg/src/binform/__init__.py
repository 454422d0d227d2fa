"""Exact invariant theory of the Bezoutiant of two binary forms."""

from .bezoutiant import (
    Pencil,
    TransvectantSeries,
    bezoutiant,
    c_constant,
    odd_series,
    taylor_decompose,
    taylor_reconstruct,
)
from .errors import DomainError, ExactDivisionError
from .forms import BiForm, BinaryForm, Rational, exact_divide, specialize_y_to_x
from .linalg import LinearMapQ, kernel_basis
from .parse import parse_biform, parse_form
from .transvectants import (
    GordanParams,
    clebsch_gordan_expand,
    gordan_residual,
    polar,
    sym_polarize,
    transvectant,
)

__all__ = [
    "BiForm", "BinaryForm", "DomainError", "ExactDivisionError", "GordanParams",
    "LinearMapQ", "Pencil", "Rational", "TransvectantSeries", "bezoutiant", "c_constant",
    "clebsch_gordan_expand", "exact_divide", "gordan_residual", "kernel_basis",
    "odd_series", "parse_biform", "parse_form", "polar", "specialize_y_to_x",
    "sym_polarize", "taylor_decompose", "taylor_reconstruct", "transvectant",
]
