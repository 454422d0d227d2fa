"""Command-line front end: ``binform <verb> ...``.

Exit codes: 0 success, 1 domain error (precondition violated), 2 usage error.
Any form argument may be the word ``random`` to draw a seeded random form of
the required order.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import reduction as red
from . import relations as rel
from . import transvectants as tv
from . import wronskian as wr
from .bezoutiant import TransvectantSeries, bezoutiant, odd_series, taylor_decompose
from .errors import DomainError, ParseError
from .forms import BiForm, BinaryForm
from .parse import parse_biform, parse_form
from .randforms import random_form
from .verify import SUITES, parse_range, verify_suite


class _Ctx:
    def __init__(self, args):
        self.args = args
        self.rng = random.Random(args.seed)

    def form(self, text, order=None):
        if text.strip().lower() in ("random", "<random>"):
            if order is None:
                raise ParseError("'random' needs a known order")
            return random_form(order, self.rng, nonzero=False)
        return parse_form(text, order)


def _emit(args, value):
    if args.json:
        print(json.dumps(_to_json(value), sort_keys=True))
    else:
        print(_to_text(value))


def _to_json(value):
    if isinstance(value, (BinaryForm, BiForm, TransvectantSeries)):
        return value.to_json()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_json(v) for v in value]
    return value


def _to_text(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, TransvectantSeries):
        return "\n".join(f"T{2 * r + 1} = {U}" for r, U in enumerate(value.terms))
    if isinstance(value, dict):
        return "\n".join(f"{k} = {_to_text(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return "\n".join(_to_text(v) for v in value)
    return str(value)


# -- verbs -------------------------------------------------------------------

def cmd_transvect(ctx):
    a = ctx.args
    return tv.transvectant(ctx.form(a.E), ctx.form(a.F), a.r)


def cmd_polar(ctx):
    return tv.polar(ctx.form(ctx.args.E), ctx.args.m)


def cmd_gordan_check(ctx):
    a = ctx.args
    E, F, G = ctx.form(a.E), ctx.form(a.F), ctx.form(a.G)
    try:
        a1, a2, a3 = (int(x) for x in a.a.split(","))
    except ValueError:
        raise ParseError(f"--a expects three integers a1,a2,a3, got {a.a!r}") from None
    p = tv.GordanParams(a1, a2, a3, E.order, F.order, G.order)
    lhs, rhs = tv.gordan_sides(E, F, G, p)
    return {"lhs": lhs, "rhs": rhs, "holds": lhs == rhs}


def cmd_bezout(ctx):
    return bezoutiant(ctx.form(ctx.args.A), ctx.form(ctx.args.B))


def cmd_taylor(ctx):
    d = ctx.args.d
    return taylor_decompose(parse_biform(ctx.args.U, (d - 1, d - 1)), d)


def cmd_series(ctx):
    A = ctx.form(ctx.args.A)
    return odd_series(A, ctx.form(ctx.args.B, A.order))


def _ode(ctx):
    a = ctx.args
    d = a.d
    M = ctx.form(a.M, 2 * d - 2)
    if a.N is None or 2 * d - 6 < 0:
        N = BinaryForm.zero(2 * d - 6)
    else:
        N = ctx.form(a.N, 2 * d - 6)
    return wr.OdeParams(d, M, N)


def cmd_psi(ctx):
    p = _ode(ctx)
    return wr.psi_apply(p, ctx.form(ctx.args.F, p.d))


def cmd_kernel(ctx):
    return wr.psi_kernel(_ode(ctx))


def cmd_phi(ctx):
    p = _ode(ctx)
    if ctx.args.r is not None:
        return wr.phi_covariant(p, ctx.args.r)
    return {f"Phi{r}": P for r, P in enumerate(wr.phi_covariants(p))}


def cmd_recover(ctx):
    P, lam = wr.recover_pencil(_ode(ctx))
    return {"A": P.A, "B": P.B, "lambda": lam}


def cmd_realizable(ctx):
    return wr.realizable(_ode(ctx))


def cmd_reduce(ctx):
    a = ctx.args
    A = ctx.form(a.A)
    if (a.B is None) == (a.R is None):
        raise ParseError("give exactly one of --B or --R")
    if a.B is not None:
        R = bezoutiant(A, ctx.form(a.B, A.order))
    else:
        R = parse_biform(a.R, (A.order - 1, A.order - 1))
    return red.reduce(a.invariant, A, R)


def cmd_t5(ctx):
    a = ctx.args
    return rel.t5_formula(ctx.form(a.T1, 2 * a.d - 2), ctx.form(a.T3, 2 * a.d - 6), a.d)


def cmd_t7(ctx):
    a = ctx.args
    d = a.d
    return rel.t7_formula(ctx.form(a.T1, 2 * d - 2), ctx.form(a.T3, 2 * d - 6),
                          ctx.form(a.T5, 2 * d - 10), d)


def cmd_resultant3(ctx):
    A, B = ctx.form(ctx.args.A, 3), ctx.form(ctx.args.B, 3)
    value = rel.resultant_d3(tv.transvectant(A, B, 1), tv.transvectant(A, B, 3))
    return {"value": value, "sylvester": rel.sylvester_resultant(A, B),
            "constant": rel.RESULTANT_D3_CONSTANT}


def cmd_jacobian(ctx):
    A = ctx.form(ctx.args.A)
    M = ctx.form(ctx.args.M, 2 * A.order - 2)
    witness = rel.jacobian_witness(A, M)
    out = {"holds": witness is not None, "witness": witness if witness is not None else "none",
           "A_divides_(A,M)_2": rel.jacobian_necessary(A, M)}
    if A.order == 2:
        out["criterion"] = rel.jacobian_criterion_d2(A, M)
    elif A.order == 3:
        out["criterion"] = rel.jacobian_criterion_d3(A, M)
    return out


def cmd_mineq4(ctx):
    return rel.minimal_equation_residual_d4(ctx.form(ctx.args.A, 4), ctx.form(ctx.args.B, 4))


def cmd_derive_relation(ctx):
    a = ctx.args
    normalize = None
    if a.normalize:
        try:
            k, v = a.normalize.split("=")
            normalize = (int(k), Fraction(v))
        except ValueError:
            raise ParseError(f"--normalize expects index=value, got {a.normalize!r}") from None
    sol = rel.derive_relation(a.basis, a.d, seed=a.seed, normalize=normalize)
    return {"basis": [str(e) for e in sol.basis.entries], "coefficients": list(sol.coefficients)}


def cmd_rho(ctx):
    return rel.catalan_rho(ctx.args.d)


def cmd_verify(ctx):
    a = ctx.args
    return verify_suite(a.suite, a.d, a.trials, a.seed)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--seed", type=int, default=0, help="seed for random inputs")

    parser = argparse.ArgumentParser(prog="binform", description="Invariant theory of the Bezoutiant.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("transvect", cmd_transvect, "r-th transvectant (E, F)_r")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("E")
    sp.add_argument("F")

    sp = add("polar", cmd_polar, "m-th polar of E")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("E")

    sp = add("gordan-check", cmd_gordan_check, "both sides of a Gordan series")
    sp.add_argument("--a", required=True, help="a1,a2,a3")
    for name in ("E", "F", "G"):
        sp.add_argument(name)

    sp = add("bezout", cmd_bezout, "Bezoutiant R(A, B)")
    sp.add_argument("A")
    sp.add_argument("B")

    sp = add("taylor", cmd_taylor, "Taylor series of a symmetric biform")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("U")

    sp = add("series", cmd_series, "odd transvectants of A, B")
    sp.add_argument("A")
    sp.add_argument("B")

    for name, fn, help_ in (("psi", cmd_psi, "apply psi_{M,N} to F"),
                            ("kernel", cmd_kernel, "kernel of psi_{M,N}"),
                            ("phi", cmd_phi, "realizability covariants Phi_r"),
                            ("recover", cmd_recover, "recover the pencil from (M, N)"),
                            ("realizable", cmd_realizable, "whether (M, N) comes from a pencil")):
        sp = add(name, fn, help_)
        sp.add_argument("--d", type=int, required=True)
        sp.add_argument("--M", required=True)
        sp.add_argument("--N")
        if name == "psi":
            sp.add_argument("F")
        if name == "phi":
            sp.add_argument("--r", type=int)

    sp = add("reduce", cmd_reduce, "recover B mod A from A and R(A, B)")
    sp.add_argument("--invariant", choices=("auto", "deg2", "deg4"), default="auto")
    sp.add_argument("A")
    sp.add_argument("--B")
    sp.add_argument("--R")

    sp = add("t5", cmd_t5, "(A,B)_5 from T1, T3")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--T1", required=True)
    sp.add_argument("--T3", required=True)

    sp = add("t7", cmd_t7, "(A,B)_7 from T1, T3, T5")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--T1", required=True)
    sp.add_argument("--T3", required=True)
    sp.add_argument("--T5", required=True)

    sp = add("resultant3", cmd_resultant3, "resultant of cubics through T1, T3")
    sp.add_argument("A")
    sp.add_argument("B")

    sp = add("jacobian", cmd_jacobian, "is M = (A, B)_1 for some B?")
    sp.add_argument("A")
    sp.add_argument("M")

    sp = add("mineq4", cmd_mineq4, "residual of the quartic minimal equation")
    sp.add_argument("A")
    sp.add_argument("B")

    sp = add("derive-relation", cmd_derive_relation,
             "undetermined coefficients over M1 = T1, M3 = T3, ...")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--normalize", help="index=value, e.g. 2=1")
    sp.add_argument("basis", help="entries separated by ';', e.g. '(M1,M1)_4; (M1,M3)_2; M3^2'")

    sp = add("rho", cmd_rho, "Catalan number rho(d)")
    sp.add_argument("d", type=int)

    sp = add("verify", cmd_verify, "randomized verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--d", help="n or a..b")
    sp.add_argument("--trials", type=int, default=20)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "d", None) is not None and args.verb == "verify":
        try:
            args.d = parse_range(args.d)
        except ValueError:
            parser.error(f"bad --d value {args.d!r}")
    try:
        value = args.fn(_Ctx(args))
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, value)
    if args.verb == "verify" and value["failed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
