"""Randomized verification suites with machine-readable reports."""

from __future__ import annotations

import random
from fractions import Fraction

from .bezoutiant import bezoutiant, odd_series, taylor_decompose
from .errors import DomainError
from .forms import BiForm, BinaryForm
from .randforms import random_form, random_gordan_params, random_pencil
from .reduction import InvariantSpec, evectant, invariant_J, reduce
from .relations import (
    RESULTANT_D3_CONSTANT,
    jacobian_criterion_d2,
    jacobian_criterion_d3,
    jacobian_predicate,
    minimal_equation_residual_d4,
    resultant_d3,
    sylvester_resultant,
    t5_formula,
    t7_formula,
)
from .transvectants import clebsch_gordan_expand, clebsch_gordan_sum, gordan_sides, transvectant
from .wronskian import OdeParams, psi_kernel, realizable, recover_pencil, wronskian_identity_residual

DEFAULT_RANGES = {
    "taylor": (1, 8),
    "wronskian": (2, 7),
    "gordan": (6, 6),
    "reduction": (2, 7),
    "t5t7": (5, 9),
    "resultant": (3, 3),
    "mineq4": (4, 4),
    "jacobian": (2, 3),
    "phi": (3, 4),
}


def _enc(x):
    if isinstance(x, (BinaryForm, BiForm)):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _enc(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    return x


class _Report:
    def __init__(self, suite, seed):
        self.data = {"suite": suite, "seed": seed, "passed": 0, "failed": 0, "failures": []}

    def record(self, ok, inputs, expected, got):
        if ok:
            self.data["passed"] += 1
        else:
            self.data["failed"] += 1
            self.data["failures"].append(
                {"inputs": _enc(inputs), "expected": _enc(expected), "got": _enc(got)})

    def count(self, key):
        counts = self.data.setdefault("counts", {})
        counts[key] = counts.get(key, 0) + 1


def _taylor(rep, d, rng):
    A, B = random_pencil(d, rng)
    expected = odd_series(A, B).terms
    got = taylor_decompose(bezoutiant(A, B), d).terms
    rep.record(got == expected, {"d": d, "A": A, "B": B}, expected, got)


def _wronskian(rep, d, rng):
    A, B, F = (random_form(d, rng) for _ in range(3))
    res = wronskian_identity_residual(A, B, F)
    rep.record(res.is_zero(), {"d": d, "A": A, "B": B, "F": F}, "0", res)


def _gordan(rep, max_order, rng):
    p = random_gordan_params(rng, max_order)
    E, F, G = random_form(p.e, rng), random_form(p.f, rng), random_form(p.g, rng)
    lhs, rhs = gordan_sides(E, F, G, p)
    rep.record(lhs == rhs, {"params": [p.a1, p.a2, p.a3], "E": E, "F": F, "G": G}, lhs, rhs)
    e, f = rng.randint(0, min(max_order, 5)), rng.randint(0, min(max_order, 5))
    E, F = random_form(e, rng), random_form(f, rng)
    got = clebsch_gordan_sum(clebsch_gordan_expand(E, F))
    expected = BiForm.outer(E, F)
    rep.record(got == expected, {"E": E, "F": F}, expected, got)


def _reduction(rep, d, rng):
    spec = InvariantSpec.for_order(d)
    while True:
        A, B = random_pencil(d, rng)
        J = invariant_J(spec, A)
        if J:
            break
    Ev = evectant(spec, A)
    lemma = transvectant(Ev, A, d).leading_coefficient()
    rep.record(lemma == J, {"d": d, "A": A, "check": "evectant"}, J, lemma)
    beta = reduce(spec, A, bezoutiant(A, B))
    expected = B - A.scale(transvectant(Ev, B, d).leading_coefficient() / J)
    rep.record(beta == expected, {"d": d, "A": A, "B": B}, expected, beta)


def _t5t7(rep, d, rng):
    A, B = random_pencil(d, rng)
    T = {i: transvectant(A, B, i) for i in (1, 3, 5, 7)}
    got5 = t5_formula(T[1], T[3], d)
    rep.record(got5 == T[5], {"d": d, "A": A, "B": B, "check": "T5"}, T[5], got5)
    if d >= 7:
        got7 = t7_formula(T[1], T[3], T[5], d)
        rep.record(got7 == T[7], {"d": d, "A": A, "B": B, "check": "T7"}, T[7], got7)


def _resultant(rep, d, rng):
    A, B = random_pencil(3, rng)
    got = resultant_d3(transvectant(A, B, 1), transvectant(A, B, 3))
    expected = RESULTANT_D3_CONSTANT * sylvester_resultant(A, B)
    rep.record(got == expected, {"A": A, "B": B}, expected, got)


def _mineq4(rep, d, rng):
    A, B = random_pencil(4, rng)
    res = minimal_equation_residual_d4(A, B)
    rep.record(res.is_zero(), {"A": A, "B": B}, "0", res)


def _jacobian(rep, d, rng):
    A = random_form(d, rng)
    if rng.random() < 0.5:
        M = transvectant(A, random_form(d, rng), 1)
        rep.count("constructed")
    else:
        M = random_form(2 * d - 2, rng, nonzero=False)
        rep.count("random")
    criterion = jacobian_criterion_d2 if d == 2 else jacobian_criterion_d3
    expected = jacobian_predicate(A, M)
    got = criterion(A, M)
    rep.count("true" if expected else "false")
    rep.record(got == expected, {"d": d, "A": A, "M": M}, expected, got)


def _phi(rep, d, rng):
    if rng.random() < 0.5:
        p = OdeParams.from_pencil(*random_pencil(d, rng))
    else:
        p = OdeParams(d, random_form(2 * d - 2, rng), random_form(2 * d - 6, rng, nonzero=False))
    by_phi = realizable(p)
    by_kernel = len(psi_kernel(p)) >= 2
    try:
        recover_pencil(p)
        by_recover = True
    except DomainError:
        by_recover = False
    rep.count("realizable" if by_kernel else "non-realizable")
    ok = by_phi == by_kernel == by_recover
    rep.record(ok, {"d": d, "M": p.M, "N": p.N},
               {"kernel": by_kernel}, {"phi": by_phi, "recover": by_recover})


_SUITES = {
    "taylor": _taylor,
    "wronskian": _wronskian,
    "gordan": _gordan,
    "reduction": _reduction,
    "t5t7": _t5t7,
    "resultant": _resultant,
    "mineq4": _mineq4,
    "jacobian": _jacobian,
    "phi": _phi,
}

SUITES = tuple(_SUITES)


def parse_range(text: str) -> tuple:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


def verify_suite(suite: str, d_range=None, trials: int = 20, seed: int = 0) -> dict:
    """Run ``trials`` randomized checks for each d in ``d_range``.

    For the gordan suite, ``d_range`` bounds the form orders instead.
    """
    if suite not in _SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if d_range is None:
        d_range = DEFAULT_RANGES[suite]
    elif isinstance(d_range, str):
        d_range = parse_range(d_range)
    lo, hi = d_range
    rng = random.Random(seed)
    rep = _Report(suite, seed)
    rep.data["d"] = [lo, hi]
    rep.data["trials"] = trials
    check = _SUITES[suite]
    ds = [hi] if suite == "gordan" else range(lo, hi + 1)
    for d in ds:
        for _ in range(trials):
            check(rep, d, rng)
    return rep.data
