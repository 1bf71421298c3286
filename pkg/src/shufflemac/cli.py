"""Command-line interface: ``shufflemac <subcommand> ...``.

JSON goes to stdout, human-readable summaries and timings to stderr.
Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .arith import PoleAtPoint, ZeroDenominator, as_rf, exact_check, check_identity, parse_rational, xs
from .partitions import NotContained, Partition, SkewShape
from .shuffle import (
    InvalidArity,
    PoleNotCancelled,
    ShuffleElement,
    element_E,
    element_H,
    element_S,
    evaluate_skew,
    iota,
    limits_check,
    shuffle_many,
    wheel_check,
)
from .symfunc import macdonald_P, restrict_to_alphabet

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, pretty: bool) -> None:
    if pretty:
        text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)
    else:
        text = json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    sys.stdout.buffer.write(text.encode("utf-8") + b"\n")
    sys.stdout.flush()


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _partition(text: str | None) -> Partition:
    try:
        return Partition.parse(text or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _values(text: str) -> list:
    try:
        return [parse_rational(s) for s in text.split(",") if s.strip()]
    except (ValueError, SyntaxError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


# subcommands --------------------------------------------------------------------


def cmd_macdonald(args) -> int:
    lam = _partition(args.lam)
    poly = restrict_to_alphabet(macdonald_P(lam), args.vars)
    _emit({"lambda": str(lam), "P": poly.to_json()}, args.json)
    _note(f"P_{lam}({args.vars} vars) = {poly.poly}")
    return EXIT_OK


def cmd_skew(args) -> int:
    from .correspondence import skew_algebraic, skew_lattice

    mu, nu = _partition(args.mu), _partition(args.nu)
    SkewShape(mu, nu)  # raises NotContained
    modes = ["algebraic", "lattice"] if args.mode == "both" else [args.mode]
    out = {"mu": str(mu), "nu": str(nu), "vars": args.vars}
    results = {}
    for mode in modes:
        fn = skew_algebraic if mode == "algebraic" else skew_lattice
        results[mode] = fn(mu, nu, args.vars)
        out[mode] = results[mode].to_json()
        _note(f"{mode}: {results[mode].poly}")
    if len(results) == 2:
        agree = results["algebraic"] == results["lattice"]
        out["agree"] = agree
        _emit(out, args.json)
        return EXIT_OK if agree else EXIT_FAIL
    _emit(out, args.json)
    return EXIT_OK


def _spec(args):
    from .vertex import ModelSpec

    try:
        return ModelSpec(args.n, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_trace(args) -> int:
    from .correspondence import MAX_LATTICE_N, EnumerationTooLarge
    from .vertex import BoundaryData, partition_function, trace_L, trace_T

    spec = _spec(args)
    x = _values(args.x) if args.x else xs(args.N)
    N = len(x)
    if N > MAX_LATTICE_N:
        raise EnumerationTooLarge(f"N = {N} exceeds {MAX_LATTICE_N}")
    if args.boundary:
        try:
            b = BoundaryData.parse(args.boundary)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        y = "conic" if args.conic else (_values(args.y) if args.y else xs(N, "y"))
        value = as_rf(partition_function(spec, b, x, y))
        _emit({"boundary": args.boundary, "Z": value.to_json(), "text": str(value)}, args.json)
        _note(f"Z = {value}")
        return EXIT_OK
    if args.L:
        value = as_rf(trace_L(x))
        _emit({"N": N, "L": value.to_json(), "text": str(value)}, args.json)
        _note(f"L_{N} = {value}")
        return EXIT_OK
    T = trace_T(spec, x)
    _emit({"n": spec.n, "m": spec.m, "N": N, "x": [str(v) for v in x], "T": T.to_json()}, args.json)
    _note(f"T_{N}: {len(T.coeffs)} monomials")
    return EXIT_OK


def cmd_dwpf(args) -> int:
    from .vertex import ModelSpec, domain_wall, dw_formula

    spec = _spec(args)
    if args.k not in spec.colours:
        raise UsageError(f"colour {args.k} is not in 0..{spec.n + spec.m}")
    x = _values(args.x) if args.x else xs(args.M)
    if args.conic:
        from .arith import q

        y = [q * v for v in x]
    else:
        y = _values(args.y) if args.y else xs(len(x), "y")
    if len(x) != len(y):
        raise UsageError("x and y must have the same length")
    value = as_rf(domain_wall(spec, args.k, len(x), x, y))
    formula = as_rf(dw_formula(spec, args.k, x, y))
    res = exact_check(value, formula) if args.prefer != "randomized" else check_identity(
        value, formula, trials=args.trials, seed=args.seed
    )
    _emit(
        {"k": args.k, "M": len(x), "enumerated": str(value), "formula_agrees": bool(res), "check": res.describe()},
        args.json,
    )
    _note(f"D = {value}")
    return EXIT_OK if res else EXIT_FAIL


def _factor(token: str) -> ShuffleElement:
    token = token.strip()
    try:
        if token.startswith("S"):
            return element_S(int(token[1:]))
        head, _, rest = token.partition("(")
        a = int(rest.rstrip(")")) if rest else 1
        k = int(head[1:])
        if head[0] == "E":
            return element_E(k, a)
        if head[0] == "H":
            return element_H(k, a)
    except ValueError:
        pass
    raise UsageError(f"cannot parse shuffle factor {token!r}; use E2(1), H1(3) or S2")


def cmd_shuffle(args) -> int:
    F = shuffle_many(_factor(tok) for tok in args.expr.split("*"))
    out = {"expr": args.expr, "element": F.to_json()}
    if args.wheel:
        out["wheel"] = wheel_check(F)
    if args.limits:
        out["limits"] = limits_check(F)
    if args.iota:
        out["iota_P"] = {str(lam): str(c) for lam, c in sorted(iota(F).items())}
    if args.ev:
        shape = SkewShape.parse(args.ev)
        out["ev"] = str(evaluate_skew(F, shape))
    _emit(out, args.json)
    _note(f"{args.expr} = {F.value}")
    return EXIT_OK


def cmd_mixed_cauchy(args) -> int:
    from .cauchy import kernel, kernel_projection, kernel_skew_matches, kernel_to_json, slices_equal
    from .partitions import partitions_of
    from .vertex import ModelSpec, trace_T
    from .arith import q, t

    if args.degree_cut > 4:
        raise UsageError("degree cut must be at most 4")
    out = {"degree_cut": args.degree_cut, "slices": {}, "checks": {}}
    ok = True
    for k in range(args.degree_cut + 1):
        ref = kernel(k, "exp")
        out["slices"][str(k)] = kernel_to_json(ref)
        for form in ("mon", "mac"):
            same = slices_equal(ref, kernel(k, form))
            out["checks"][f"degree {k}: exp = {form}"] = same
            ok = ok and same
    for k in range(1, min(args.degree_cut, 2) + 1):
        for size in range(k, k + 2):
            for mu in partitions_of(size):
                for nu in partitions_of(size - k):
                    if mu.contains(nu):
                        good = kernel_skew_matches(mu, nu)
                        out["checks"][f"skew {mu}/{nu}"] = good
                        ok = ok and good
    c = (t - q) / (1 - q)
    spec = ModelSpec(0, args.ny)
    for N in range(1, min(args.degree_cut, 2) + 1):
        good = c**N * trace_T(spec, xs(N)).to_rf() == kernel_projection(N, 0, args.ny)
        out["checks"][f"trace relation v^{N}"] = good
        ok = ok and good
    _emit(out, args.json)
    _note("all kernel checks passed" if ok else "a kernel check failed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    from .verify import run_suite

    timings: dict = {}
    start = time.perf_counter()
    report = run_suite(args.suite, seed=args.seed, trials=args.trials, prefer=args.prefer, timings=timings)
    _emit(report, args.json)
    for case in report["cases"]:
        _note(f"{case['result'].upper():4s} {case['id']:24s} {timings.get(case['id'], 0.0):7.2f}s")
    _note(f"{report['passed']} passed, {report['failed']} failed in {time.perf_counter() - start:.1f}s")
    return EXIT_OK if report["failed"] == 0 else EXIT_FAIL


# parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master random seed")
    common.add_argument("--json", action="store_true", help="pretty-print the JSON output")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="prefer", action="store_const", const="exact", help="prefer exact comparisons")
    mode.add_argument(
        "--randomized", dest="prefer", action="store_const", const="randomized", help="prefer randomized comparisons"
    )
    common.add_argument("--trials", type=int, default=5, help="points per randomized check")

    p = argparse.ArgumentParser(prog="shufflemac", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("macdonald", parents=[common], help="Macdonald P in finitely many variables")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--vars", type=int, required=True)
    s.set_defaults(func=cmd_macdonald)

    s = sub.add_parser("skew", parents=[common], help="skew Macdonald P_{mu/nu} (algebraic or lattice)")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", default="")
    s.add_argument("--mode", choices=["algebraic", "lattice", "both"], default="algebraic")
    s.add_argument("--vars", type=int, default=2)
    s.set_defaults(func=cmd_skew)

    s = sub.add_parser("trace", parents=[common], help="conic trace T_N, L_N or a partition function")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--N", type=int, default=2)
    s.add_argument("--x", help='row parameters, e.g. "q,1/t"')
    s.add_argument("--y", help="column parameters (with --boundary)")
    s.add_argument("--conic", action="store_true", help="set y = q x (with --boundary)")
    s.add_argument("--boundary", help="alpha,beta,gamma,delta as colour strings, e.g. 10,10,11,11")
    s.add_argument("--L", action="store_true", help="compute L_N (n = m = 1)")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("dwpf", parents=[common], help="domain-wall partition function vs closed formula")
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--m", type=int, default=0)
    s.add_argument("--k", type=int, default=1, help="colour")
    s.add_argument("--M", type=int, default=2)
    s.add_argument("--x")
    s.add_argument("--y")
    s.add_argument("--conic", action="store_true")
    s.set_defaults(func=cmd_dwpf)

    s = sub.add_parser("shuffle", parents=[common], help="shuffle products of E, H, S elements")
    s.add_argument("--expr", required=True, help='e.g. "E2(1)*H1(2)*S1"')
    s.add_argument("--wheel", action="store_true")
    s.add_argument("--limits", action="store_true")
    s.add_argument("--iota", action="store_true")
    s.add_argument("--ev", help="skew shape, e.g. 2,1/1")
    s.set_defaults(func=cmd_shuffle)

    s = sub.add_parser("mixed-cauchy", parents=[common], help="mixed Cauchy kernel expansions and checks")
    s.add_argument("--degree-cut", type=int, default=2)
    s.add_argument("--ny", type=int, default=2, help="number of w variables for the trace relation")
    s.set_defaults(func=cmd_mixed_cauchy)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    from .correspondence import EnumerationTooLarge
    from .verify import UnknownSuite

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UnknownSuite as exc:
        _note(f"error: unknown suite {exc.args[0]!r}")
        return EXIT_USAGE
    except (UsageError, NotContained, EnumerationTooLarge, InvalidArity, ValueError) as exc:
        _note(f"error: {exc}")
        return EXIT_USAGE
    except (PoleNotCancelled, PoleAtPoint, ZeroDenominator) as exc:
        _note(f"error: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
