"""Command-line front end.

Exit codes: 0 success, 1 verification counterexample, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import partitions
from .associated import compensating_h_A, theorem1_table
from .numeric import Exponent, ResourceCapError, format_value, pow_value
from .oeis import BFile, emit_bfile
from .oracle import FiniteSequence, sigma_x, sigma_x_A
from .pow2 import closed_table, sigma_pow2_recursion
from .reports import SigmaTable
from .suites import SUITES, run_suite

EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 1, 2, 3

EXPORT_IDS = {"W": "A118462", "eta": "A029931", "R": "A000009", "h0": "A000000", "h1": "A000000"}


def _exponent(text: str) -> Exponent:
    try:
        return Exponent.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def _sequence(text: str) -> FiniteSequence:
    try:
        return FiniteSequence.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write_table(table: SigmaTable, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    for record in table.records():
        if as_json:
            out.write(json.dumps(record) + "\n")
        else:
            out.write(f"{record['n']}\t{record['value']}\n")


def _sigma_table(args) -> SigmaTable:
    x, n = args.x, args.n
    if args.pow2:
        return sigma_pow2_recursion(x, n) if args.method == "recursion" else closed_table(x, n)
    if args.seq is not None:
        if args.method == "recursion":
            return theorem1_table(args.seq, x, n)
        return SigmaTable("oracle", [sigma_x_A(m, args.seq, x) for m in range(1, n + 1)])
    if args.method == "recursion":
        return partitions.theorem2_table(x, n)
    return SigmaTable("oracle", [sigma_x(m, x) for m in range(1, n + 1)])


def cmd_sigma(args) -> int:
    _write_table(_sigma_table(args), args.json)
    return 0


def cmd_h(args) -> int:
    x, n = args.x, args.n
    if args.seq is not None:
        table = SigmaTable("theorem1", [compensating_h_A(m, args.seq, x) for m in range(1, n + 1)])
    elif args.method == "profile":
        table = SigmaTable("theorem2", partitions.h_x_table(x, n))
    else:
        if n > partitions.PARTITION_CAP:
            raise ResourceCapError(f"--method {args.method}: n={n} exceeds cap {partitions.PARTITION_CAP}")
        table = SigmaTable("theorem2", [partitions.h_x(m, x, args.method) for m in range(1, n + 1)])
    _write_table(table, args.json)
    return 0


def cmd_verify(args) -> int:
    options = {}
    if args.seq is not None and args.suite != "theorem1":
        raise ValueError("--seq only applies to --suite theorem1")
    if args.suite == "theorem1":
        options = dict(trials=args.trials, max_k=args.max_k, max_a=args.max_a, seed=args.rng_seed, seq=args.seq)
    elif args.suite == "oeis":
        options = dict(refresh=args.refresh_fixtures)
    report = run_suite(args.suite, args.n, [args.x] if args.x is not None else [], **options)
    for failure in report.failures[: args.show]:
        print(f"counterexample: {failure}")
    if len(report.failures) > args.show:
        print(f"... {len(report.failures) - args.show} more")
    print(report.summary())
    return 0 if report.passed else EXIT_FAIL


def _export_values(what: str, n: int) -> list[int]:
    if what == "W":
        return partitions.W_prefix(n)
    if what == "eta":
        return [partitions.eta(j) for j in range(1, n + 1)]
    if what == "R":
        return [partitions.R(m) for m in range(1, n + 1)]
    return partitions.h_x_table(0 if what == "h0" else 1, n)


def cmd_export(args) -> int:
    bfile = BFile(args.id or EXPORT_IDS[args.what], list(enumerate(_export_values(args.what, args.n), start=1)))
    sys.stdout.write(emit_bfile(bfile))
    return 0


def _sieve_table(x: Exponent, n: int) -> list:
    # sigma_x for all m <= n at once: each d adds d**x to its multiples
    values = [x.zero()] * (n + 1)
    for d in range(1, n + 1):
        power = pow_value(d, x)
        for multiple in range(d, n + 1, d):
            values[multiple] += power
    return values[1:]


def cmd_bench(args) -> int:
    x, n = args.x, args.n
    methods = [m for m in args.methods.split(",") if m]
    rows = []
    for method in methods:
        start = time.perf_counter()
        if method == "oracle":
            values = [sigma_x(m, x) for m in range(1, n + 1)]
            terms = sum(int(sigma_x(m, 0)) for m in range(1, n + 1))
        elif method == "recursion":
            values = partitions.theorem2_table(x, n).values
            terms = partitions.T(n)
        elif method == "sieve":
            values = _sieve_table(x, n)
            terms = sum(n // d for d in range(1, n + 1))
        else:
            print(f"unknown method {method!r}", file=sys.stderr)
            return EXIT_USAGE
        elapsed = time.perf_counter() - start
        checksum = format_value(sum(values[1:], values[0]))
        rows.append((method, elapsed, elapsed / n * 1e6, terms, checksum))
    print("method\ttotal_s\tper_n_us\tterms\tchecksum")
    for method, elapsed, per_n, terms, checksum in rows:
        print(f"{method}\t{elapsed:.6f}\t{per_n:.2f}\t{terms}\t{checksum}")
    if len({row[4] for row in rows}) > 1:
        print("checksums differ", file=sys.stderr)
        return EXIT_FAIL
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divrec", description="Restricted divisor sums and their signed recursions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seq=True):
        p.add_argument("--x", type=_exponent, required=True, help="exponent; an integer selects exact arithmetic")
        p.add_argument("--n", type=_positive, required=True)
        if seq:
            p.add_argument("--seq", type=_sequence, help="comma-separated prescribed divisors a1,a2,...")
        p.add_argument("--json", action="store_true", help="JSON lines with keys n, value, method")

    p = sub.add_parser("sigma", help="divisor-sum table")
    common(p, seq=False)
    source = p.add_mutually_exclusive_group()
    source.add_argument("--seq", type=_sequence, help="comma-separated prescribed divisors a1,a2,...")
    source.add_argument("--all-divisors", action="store_true", help="ordinary sigma_x (default)")
    source.add_argument("--pow2", action="store_true", help="divisors restricted to powers of two")
    p.add_argument("--method", choices=("oracle", "recursion"), default="recursion")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("h", help="compensating-sequence table")
    common(p)
    p.add_argument("--method", choices=("profile", "enumerate", "w_index"), default="profile")
    p.set_defaults(func=cmd_h)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--x", type=_exponent)
    p.add_argument("--seq", type=_sequence, help="check this sequence instead of random ones (theorem1)")
    p.add_argument("--trials", type=_positive, default=50)
    p.add_argument("--max-k", type=_positive, default=10)
    p.add_argument("--max-a", type=_positive, default=30)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--refresh-fixtures", action="store_true", help="download b-files before checking (network)")
    p.add_argument("--show", type=int, default=10, help="counterexamples to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a b-file to stdout")
    p.add_argument("--what", choices=tuple(EXPORT_IDS), required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--id", help="sequence id recorded for the b-file (A + 6 digits)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("bench", help="time recursion against the oracle")
    p.add_argument("--x", type=_exponent, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--methods", default="oracle,recursion", help="comma list of oracle, recursion, sieve")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"divrec: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"divrec: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
