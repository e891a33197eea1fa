"""Command line surface: evaluate terms, compute gcd through the catalog
formulas, verify formulas against Euclid on grids, extract series
coefficients, and benchmark the two formula paths.

Exit codes: 0 success; 1 syntax error in a term; 2 evaluation or input
error; 3 an identity check failed (verify found an undocumented mismatch,
or bench saw the two paths disagree).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import GcdLabError, InvalidInput
from .formulas import (
    GcdFormula,
    Variant,
    euclid_gcd,
    formula_term,
    gcd_formula,
    gcd_via_formula,
)
from .modular import (
    BENCH_CSV_HEADER,
    bench_compare,
    modmod_direct_signed,
    modmod_signed_value,
)
from .parser import ParseError, parse_term
from .series import (
    RationalFunction,
    check_extraction_conditions,
    extract_coefficient,
    parse_polynomial,
)
from .terms import evaluate, substitute

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_ERROR = 2
EXIT_VIOLATION = 3

DEFAULT_MAX_EXPONENT_BITS = 26


class Mismatch(NamedTuple):
    a: int
    b: int
    got: int
    expected: int


@dataclass
class VerificationReport:
    formula: GcdFormula
    range_max: int
    mode: str
    mismatches: list[Mismatch]
    elapsed_ms: float

    def documented_mismatches(self) -> Optional[set[tuple[int, int]]]:
        """Exception pairs that fall inside the grid, or None when unknown."""
        if self.formula.exceptions is None:
            return None
        return {
            (a, b)
            for (a, b) in self.formula.exceptions
            if a <= self.range_max and b <= self.range_max
        }

    def json_dict(self) -> dict:
        return {
            "variant": self.formula.variant.value,
            "base": self.formula.base,
            "range_max": self.range_max,
            "mismatches": [
                {"a": m.a, "b": m.b, "got": m.got, "expected": m.expected}
                for m in self.mismatches
            ],
            "elapsed_ms": self.elapsed_ms,
        }


def run_verification(
    f: GcdFormula,
    range_max: int,
    mode: str = "fast",
    max_exponent: Optional[int] = None,
) -> VerificationReport:
    """Check the variant against Euclid on the grid 1..range_max squared.

    term mode evaluates each variant by its own exact definition (term
    evaluation, or materializing arithmetic for mod-mod).  fast mode routes
    through the modular engine and re-evaluates any mismatch by the exact
    definition, so reported values are always the formula's true output.
    mazzanti has no fast path and always evaluates its term.
    """
    if range_max < 1:
        raise InvalidInput("grid bound must be at least 1")
    if mode not in ("term", "fast"):
        raise InvalidInput(f"unknown mode: {mode!r}")
    use_fast = mode == "fast" and f.variant is not Variant.MAZZANTI
    term = formula_term(f) if f.variant is not Variant.MODMOD else None
    mismatches: list[Mismatch] = []
    start = time.perf_counter()
    for a in range(1, range_max + 1):
        for b in range(1, range_max + 1):
            expected = euclid_gcd(a, b)
            if f.variant is Variant.MODMOD:
                if use_fast:
                    got = modmod_signed_value(a, b, f.base)
                else:
                    got = modmod_direct_signed(a, b, f.base)
            elif use_fast:
                got = modmod_signed_value(a, b, f.base)
                if got != expected:
                    got = evaluate(substitute(term, {"a": a, "b": b}), max_exponent=max_exponent)
            else:
                got = evaluate(substitute(term, {"a": a, "b": b}), max_exponent=max_exponent)
            if got != expected:
                mismatches.append(Mismatch(a, b, got, expected))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(f, range_max, mode, mismatches, elapsed_ms)


def report_exit_code(report: VerificationReport) -> int:
    """0 when observed mismatches are exactly the documented ones (or the
    exception set is unknown and the run is merely empirical), else 3."""
    documented = report.documented_mismatches()
    if documented is None:
        return EXIT_OK
    observed = {(m.a, m.b) for m in report.mismatches}
    return EXIT_OK if observed == documented else EXIT_VIOLATION


def _exponent_limit(args: argparse.Namespace) -> int:
    return 1 << args.max_exponent_bits


def _cmd_eval(args: argparse.Namespace) -> int:
    try:
        term = parse_term(args.expr)
    except ParseError as e:
        print(f"syntax error: {e.message} at {e.span.start}..{e.span.end}", file=sys.stderr)
        return EXIT_SYNTAX
    env = {}
    for binding in args.bind or []:
        name, sep, value = binding.partition("=")
        if not sep or not name.isidentifier() or not value.isdigit():
            print(f"bad binding {binding!r}, expected NAME=NATURAL", file=sys.stderr)
            return EXIT_ERROR
        env[name] = int(value)
    try:
        result = evaluate(term, env, max_exponent=_exponent_limit(args))
    except GcdLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    print(result)
    return EXIT_OK


def _warn_exception_pair(f: GcdFormula, a: int, b: int) -> None:
    print(
        f"warning: ({a}, {b}) is a documented exception for {f.variant.value} "
        f"base {f.base}; the formula value differs from gcd there",
        file=sys.stderr,
    )


def _cmd_gcd(args: argparse.Namespace) -> int:
    try:
        f = gcd_formula(Variant(args.variant), args.base)
        if args.a < 1 or args.b < 1:
            raise InvalidInput("a and b must be at least 1")
        if f.exceptions and (args.a, args.b) in f.exceptions:
            _warn_exception_pair(f, args.a, args.b)
        value = gcd_via_formula(f, args.a, args.b, max_exponent=_exponent_limit(args))
    except GcdLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    print(value)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        f = gcd_formula(Variant(args.variant), args.base)
        mode = args.mode or ("term" if f.variant is Variant.MAZZANTI else "fast")
        if mode == "fast" and f.variant is Variant.MAZZANTI:
            print("note: mazzanti has no fast path, evaluating terms", file=sys.stderr)
        report = run_verification(f, args.max, mode, max_exponent=_exponent_limit(args))
    except GcdLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if f.exceptions:
        for ea, eb in sorted(f.exceptions):
            if ea <= args.max and eb <= args.max:
                _warn_exception_pair(f, ea, eb)
    documented = report.documented_mismatches()
    if not args.json:
        print(f"variant={f.variant.value} base={f.base} max={args.max} mode={report.mode}")
        print(f"pairs checked: {args.max * args.max}")
        print(f"mismatches: {len(report.mismatches)}")
        for m in report.mismatches:
            note = " (documented exception)" if documented and (m.a, m.b) in documented else ""
            print(f"  a={m.a} b={m.b} got={m.got} expected={m.expected}{note}")
        print(f"elapsed: {report.elapsed_ms:.1f} ms")
    payload = json.dumps(report.json_dict())
    print(payload)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_ERROR
    if documented is None and report.mismatches:
        print(
            f"note: base {f.base} has no documented exception set; "
            f"{len(report.mismatches)} empirical mismatch(es) reported",
            file=sys.stderr,
        )
    return report_exit_code(report)


def _cmd_extract(args: argparse.Namespace) -> int:
    try:
        f = RationalFunction(parse_polynomial(args.num), parse_polynomial(args.den))
        params = check_extraction_conditions(f, args.base, args.check_to)
        value = extract_coefficient(f, args.base, args.n)
    except GcdLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    if args.n < params.m:
        print(
            f"warning: n={args.n} is below the valid rank m={params.m}; "
            f"the printed value may not equal s({args.n})",
            file=sys.stderr,
        )
    print(value)
    print(
        f"rank m = {params.m} (growth s(n) < {params.c}^(n-2) checked empirically "
        f"up to n = {params.growth_margin_checked_to})"
    )
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    pairs: list[tuple[int, int]] = []
    for text in args.pair or []:
        left, sep, right = text.partition(",")
        try:
            pair = (int(left), int(right))
        except ValueError:
            pair = (0, 0)
        if not sep or pair[0] < 1 or pair[1] < 1:
            print(f"bad pair {text!r}, expected A,B with naturals >= 1", file=sys.stderr)
            return EXIT_ERROR
        pairs.append(pair)
    records = []
    try:
        for a, b in pairs:  # strictly sequential, one pair at a time
            records.append(bench_compare(a, b, args.base, args.reps))
    except GcdLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            if args.json:
                json.dump([r.json_dict() for r in records], fh, indent=2)
                fh.write("\n")
            else:
                fh.write(BENCH_CSV_HEADER + "\n")
                for r in records:
                    fh.write(r.csv_row() + "\n")
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_ERROR
    if records:
        print(f"{'a':>6} {'b':>6} {'bits_A':>10} {'divmod_ms':>11} {'modmod_ms':>11} {'speedup':>8} equal")
        for r in records:
            speedup = r.divmod_ns / r.modmod_ns if r.modmod_ns else float("inf")
            flag = "true" if r.values_equal else "false"
            print(
                f"{r.a:>6} {r.b:>6} {r.bits_a:>10} {r.divmod_ns / 1e6:>11.3f} "
                f"{r.modmod_ns / 1e6:>11.3f} {speedup:>8.2f} {flag}"
            )
    else:
        print("no pairs benchmarked")
    if any(not r.values_equal for r in records):
        print("error: the two formula paths disagree on at least one pair", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _add_guard_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-exponent-bits",
        type=int,
        default=DEFAULT_MAX_EXPONENT_BITS,
        metavar="BITS",
        help="refuse exponents above 2^BITS (default %(default)s)",
    )


def _add_variant_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--variant",
        required=True,
        choices=[v.value for v in Variant],
        help="which formula to use",
    )
    parser.add_argument(
        "--base",
        type=int,
        default=5,
        help="exponentiation base (default %(default)s; pinned to 2 for mazzanti)",
    )


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcdlab",
        description="Exact laboratory for arithmetic-term representations of gcd.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="parse and evaluate a term")
    p_eval.add_argument("expr", help="term text, e.g. '2^10 - 1'")
    p_eval.add_argument(
        "--bind",
        action="append",
        metavar="NAME=VALUE",
        help="bind a variable to a natural (repeatable)",
    )
    _add_guard_flag(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_gcd = sub.add_parser("gcd", help="compute gcd(a, b) through a formula")
    p_gcd.add_argument("a", type=int)
    p_gcd.add_argument("b", type=int)
    _add_variant_flags(p_gcd)
    _add_guard_flag(p_gcd)
    p_gcd.set_defaults(handler=_cmd_gcd)

    p_verify = sub.add_parser("verify", help="check a formula against Euclid on a grid")
    _add_variant_flags(p_verify)
    p_verify.add_argument("--max", type=int, default=10, help="grid bound (default %(default)s)")
    p_verify.add_argument(
        "--mode",
        choices=["term", "fast"],
        default=None,
        help="evaluation route (default: term for mazzanti, fast otherwise)",
    )
    p_verify.add_argument("--json", action="store_true", help="print only the JSON report")
    p_verify.add_argument("--out", metavar="PATH", help="also write the JSON report here")
    _add_guard_flag(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_extract = sub.add_parser("extract", help="extract a series coefficient")
    p_extract.add_argument("num", help="numerator coefficients, lowest first, e.g. '1'")
    p_extract.add_argument("den", help="denominator coefficients, e.g. '1,-2,1'")
    p_extract.add_argument("--base", type=int, default=5, help="extraction base (default %(default)s)")
    p_extract.add_argument("--n", type=int, required=True, help="coefficient index")
    p_extract.add_argument(
        "--check-to",
        dest="check_to",
        type=int,
        default=50,
        help="verify the growth condition up to this index (default %(default)s)",
    )
    p_extract.set_defaults(handler=_cmd_extract)

    p_bench = sub.add_parser("bench", help="time div-mod against mod-mod")
    p_bench.add_argument("--pair", action="append", metavar="A,B", help="pair to time (repeatable)")
    p_bench.add_argument("--base", type=int, default=5, help="formula base (default %(default)s)")
    p_bench.add_argument("--reps", type=int, default=3, help="repetitions per pair (default %(default)s)")
    p_bench.add_argument("--out", required=True, metavar="PATH", help="CSV (or JSON) output path")
    p_bench.add_argument("--json", action="store_true", help="write JSON instead of CSV")
    p_bench.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # exact decimal output at any size
    args = build_arg_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
