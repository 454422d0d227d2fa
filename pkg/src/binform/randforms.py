"""Seeded random forms for property checks: integer coefficients in [-9, 9]."""

from __future__ import annotations

import random

from .forms import BinaryForm
from .transvectants import GordanParams, transvectant

LO, HI = -9, 9


def random_form(order: int, rng: random.Random, nonzero: bool = True) -> BinaryForm:
    while True:
        F = BinaryForm(order, tuple(rng.randint(LO, HI) for _ in range(order + 1)))
        if not nonzero or F:
            return F


def random_pencil(d: int, rng: random.Random):
    """Two linearly independent order-d forms."""
    while True:
        A, B = random_form(d, rng), random_form(d, rng)
        if transvectant(A, B, 1):
            return A, B


def random_rational(rng: random.Random, nonzero: bool = False) -> int:
    while True:
        c = rng.randint(LO, HI)
        if c or not nonzero:
            return c


def random_gordan_params(rng: random.Random, max_order: int) -> GordanParams:
    """Legal Gordan parameters with all orders at most ``max_order``."""
    while True:
        e, f, g = (rng.randint(0, max_order) for _ in range(3))
        a1, a2, a3 = (rng.randint(0, max_order) for _ in range(3))
        if rng.random() < 0.5:
            a1 = 0
        elif a3 <= e:
            a2 = e - a3
        p = GordanParams(a1, a2, a3, e, f, g)
        if p.is_legal():
            return p
