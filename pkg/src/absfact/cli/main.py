"""Command-line interface.

Exit codes: 0 = certified / factored, 2 = unknown (or input not rationally
irreducible under --verify-rational), 1 = usage or parse errors.

JSON convention: coefficient-scale integers (polynomial coefficients, matrix
entries, primes, residues) are decimal strings so arbitrary precision
survives any JSON reader; structural numbers (exponents, degrees, counts,
lattice dimensions) are plain JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..absfac import AbsFacConfig, abs_fac
from ..errors import AbsFactError
from ..irrtest import (
    newton_polytope_mod,
    newton_polytope_mod_chg_var,
    ragot_test,
    test_direct,
)
from ..lattice import LatticeBasis, lll_reduce
from ..numfield import bi_irreducible_q
from ..polytope import newton_polytope
from ..rings import Zmod
from .bench import BenchConfig, run_bench
from .expr import ExprError, parse_poly

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="absfact", description="absolute factorization toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="Las Vegas absolute irreducibility test")
    t.add_argument("poly", help="polynomial expression, or @file")
    t.add_argument(
        "--method",
        choices=["direct", "mod", "chgvar", "ragot"],
        default="chgvar",
    )
    t.add_argument("--pmax", type=int, default=101)
    t.add_argument(
        "--verify-rational",
        action="store_true",
        help="check rational irreducibility before testing",
    )

    f = sub.add_parser("factor", help="absolute factorization")
    f.add_argument("poly", help="polynomial expression, or @file")
    f.add_argument("--mode", choices=["strict", "hilbert"], default="strict")
    f.add_argument("--lift", choices=["linear", "quadratic"], default="quadratic")
    f.add_argument("--reconstruct", choices=["xadic", "interp"], default="xadic")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--max-retries", type=int, default=40)
    f.add_argument("--json", action="store_true")

    g = sub.add_parser("polytope", help="Newton polytope and condition (C)")
    g.add_argument("poly", help="polynomial expression, or @file")
    g.add_argument("-p", type=int, default=None, help="reduce mod this prime first")

    l = sub.add_parser("lll", help="exact LLL reduction of integer columns")
    l.add_argument("matrix", help="JSON array of columns (decimal strings), or @file")
    l.add_argument("--delta", default="3/4")

    b = sub.add_parser("bench", help="statistics for the polytope test")
    b.add_argument("--degree", type=int, required=True)
    b.add_argument("--count", type=int, required=True)
    b.add_argument("--prop", type=int, choices=[1, 2], default=1)
    b.add_argument("--bound", type=int, default=10 ** 12)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--dense", action="store_true")
    b.add_argument("--filter-rational", action="store_true")
    b.add_argument("--json", action="store_true")
    return p


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return text


def _parse_input_poly(text: str):
    expr = parse_poly(_read_arg(text))
    return expr.poly_int()


def _cmd_test(args) -> int:
    f = _parse_input_poly(args.poly)
    if args.verify_rational and not bi_irreducible_q(f):
        print("not rationally irreducible: the test hypotheses do not apply")
        return EXIT_UNKNOWN
    if args.method == "direct":
        ans = test_direct(f)
    elif args.method == "mod":
        ans = newton_polytope_mod(f)
    elif args.method == "chgvar":
        ans = newton_polytope_mod_chg_var(f, p_max=args.pmax)
    else:
        ans = ragot_test(f, p_max=args.pmax)
    if ans.certified:
        w = ans.witness
        extra = ""
        if w.p is not None:
            extra += f", p={w.p}"
        if w.shift is not None:
            extra += f", shift={w.shift}"
        print(f"absolutely irreducible (method={w.method}{extra})")
        return EXIT_OK
    print("I don't know")
    return EXIT_UNKNOWN


def _rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _factor_json(res) -> dict:
    if res.status == "unknown":
        return {"status": "unknown"}
    out = {
        "status": res.status,
        "q": [str(int(c)) for c in res.q.coeffs],
        "s": res.s,
        "m": res.m,
        "factor": {
            "terms": [
                {"i": i, "j": j, "coeff": [_rat_str(c) for c in val.coeffs]}
                for (i, j), val in sorted(res.f1.terms.items())
            ]
        },
    }
    if res.certificate is not None:
        c = res.certificate
        out["certificate"] = {
            "x0": c.x0,
            "y0": c.y0,
            "p": str(c.p),
            "lambda": c.lam,
            "alpha_bar": str(c.alpha_bar),
        }
    return out


def _cmd_factor(args) -> int:
    f = _parse_input_poly(args.poly)
    cfg = AbsFacConfig(
        mode=args.mode,
        lift=args.lift,
        reconstruct=args.reconstruct,
        seed=args.seed,
        max_retries=args.max_retries,
    )
    res = abs_fac(f, config=cfg)
    if args.json:
        print(json.dumps(_factor_json(res)))
    else:
        if res.status == "unknown":
            print("I don't know")
        elif res.status == "absolutely_irreducible":
            print("absolutely irreducible; q(T) = T")
        else:
            qs = " + ".join(
                f"{int(c)}*T^{k}" if k else str(int(c))
                for k, c in enumerate(res.q.coeffs)
                if int(c)
            )
            print(f"s = {res.s}, m = {res.m}")
            print(f"q(T) = {qs}")
            print(f"f1 = {res.f1.to_str()}  (alpha = class of T)")
            c = res.certificate
            print(f"certificate: (x0,y0)=({c.x0},{c.y0}), p={c.p}, lambda={c.lam}")
    return EXIT_OK if res.status != "unknown" else EXIT_UNKNOWN


def _cmd_polytope(args) -> int:
    f = _parse_input_poly(args.poly)
    if args.p is not None:
        ring = Zmod(args.p)
        f = f.map_coeffs(lambda c: ring.from_int(int(c)), ring)
        if f.is_zero:
            print(json.dumps({"error": "polynomial vanishes mod p"}))
            return EXIT_UNKNOWN
    pt = newton_polytope(f)
    out = {
        "vertices": [[i, j] for i, j in pt.vertices],
        "g": pt.g,
        "condition_C": pt.g == 1,
    }
    if args.p is not None:
        out["p"] = args.p
    print(json.dumps(out))
    return EXIT_OK


def _cmd_lll(args) -> int:
    data = json.loads(_read_arg(args.matrix))
    cols = [[int(x) for x in col] for col in data]
    delta = Fraction(args.delta)
    red = lll_reduce(LatticeBasis(cols), delta)
    print(json.dumps([[str(x) for x in col] for col in red.columns]))
    return EXIT_OK


def _cmd_bench(args) -> int:
    cfg = BenchConfig(
        degree=args.degree,
        count=args.count,
        prop=args.prop,
        bound=args.bound,
        seed=args.seed,
        dense=args.dense,
        filter_rational=args.filter_rational,
    )
    rep = run_bench(cfg)
    print(rep.to_json() if args.json else rep.text_table())
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "test":
            return _cmd_test(args)
        if args.command == "factor":
            return _cmd_factor(args)
        if args.command == "polytope":
            return _cmd_polytope(args)
        if args.command == "lll":
            return _cmd_lll(args)
        if args.command == "bench":
            return _cmd_bench(args)
    except ExprError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError, AbsFactError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
