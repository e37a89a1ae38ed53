"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`VerificationReport`; counterexamples are report
content, never exceptions.
"""

from __future__ import annotations

from collections.abc import Sequence

from .associated import verify_theorem1
from .numeric import Exponent, NumValue, as_exponent, pentagonal_classify, pentagonal_stream, values_equal
from .oeis import REGISTRY, cross_check, refresh_fixture
from .oracle import sigma_x
from .partitions import lahiri_g, pe_po, theorem2_table
from .pow2 import check_identity_66, check_identity_67, closed_table, sigma_pow2_recursion
from .reports import VerificationReport, compare_tables
from .rng import SplitMix64, random_sequence

DEFAULT_EXPONENTS = (0, 1, 2, 3, -1)
SUITES = ("theorem1", "theorem2", "euler7", "id66", "id67", "pow2", "oeis", "lahiri-g")


def _exponents(xs) -> list[Exponent]:
    return [as_exponent(x) for x in (DEFAULT_EXPONENTS if not xs else xs)]


def theorem1_suite(
    trials: int = 50, max_k: int = 10, max_a: int = 30, xs: Sequence = (), seed: int = 0, extra: int = 20
) -> VerificationReport:
    """Random sequences from a seeded SplitMix64, each checked for n <= sum(A) + extra."""
    report = VerificationReport("theorem1")
    rng = SplitMix64(seed)
    for _ in range(trials):
        A = random_sequence(rng, max_k, max_a)
        for x in _exponents(xs):
            report.merge(verify_theorem1(A, x, sum(A) + extra))
    return report


def theorem2_suite(n_max: int = 120, xs: Sequence = ()) -> VerificationReport:
    report = VerificationReport("theorem2")
    for x in _exponents(xs):
        table = theorem2_table(x, n_max)
        report.merge(compare_tables("theorem2", table.items(), lambda n, x=x: sigma_x(n, x), label=f"x={x}"))
    return report


def euler7_suite(n_max: int = 500) -> VerificationReport:
    report = VerificationReport("euler7")
    for n in range(1, n_max + 1):
        even, odd = pe_po(n)
        term = pentagonal_classify(n)
        want = 0 if term is None else (-1) ** term.m
        report.record(even - odd == want, lambda n=n, d=even - odd, w=want: f"n={n}: p_e - p_o = {d}, expected {w}")
    return report


def pow2_suite(n_max: int = 4096, xs: Sequence = (0, 1, 2, -1)) -> VerificationReport:
    report = VerificationReport("pow2")
    for x in _exponents(xs):
        closed = closed_table(x, n_max)
        report.merge(
            compare_tables("pow2", sigma_pow2_recursion(x, n_max).items(), closed.__getitem__, label=f"x={x}")
        )
    return report


def oeis_suite(ids: Sequence[str] = (), refresh: bool = False) -> VerificationReport:
    report = VerificationReport("oeis")
    for sequence_id in ids or REGISTRY:
        if refresh:
            refresh_fixture(sequence_id)
        report.merge(cross_check(sequence_id))
    return report


def lahiri_g_direct(n: int, x: Exponent | int | float) -> NumValue:
    """g_x(n) straight from divisor sums, reading sigma(0) as n."""
    x = as_exponent(x)
    total = sigma_x(n, x)
    for term in pentagonal_stream(n):
        rest = n - term.value
        previous = sigma_x(rest, x) if rest > 0 else (n if x.exact else float(n))
        total -= term.sign * previous
    return total


def lahiri_g_suite(n_max: int = 60, xs: Sequence = ()) -> VerificationReport:
    report = VerificationReport("lahiri-g")
    for x in _exponents(xs):
        for n in range(1, n_max + 1):
            got, want = lahiri_g(n, x), lahiri_g_direct(n, x)
            report.record(values_equal(got, want), lambda n=n, x=x, got=got, want=want: f"x={x} n={n}: {got} != {want}")
    return report


def run_suite(name: str, n: int | None = None, xs: Sequence = (), **options) -> VerificationReport:
    if name == "theorem1":
        seq = options.pop("seq", None)
        if seq is not None:
            report = VerificationReport("theorem1")
            for x in _exponents(xs):
                report.merge(verify_theorem1(seq, x, n or sum(seq) + 20))
            return report
        return theorem1_suite(xs=xs, **options)
    if name == "theorem2":
        return theorem2_suite(n or 120, xs)
    if name == "euler7":
        return euler7_suite(n or 500)
    if name == "id66":
        return check_identity_66(n or 4096)
    if name == "id67":
        return check_identity_67(n or 4096)
    if name == "pow2":
        return pow2_suite(n or 4096, xs or (0, 1, 2, -1))
    if name == "oeis":
        return oeis_suite(refresh=options.get("refresh", False))
    if name == "lahiri-g":
        return lahiri_g_suite(n or 60, xs)
    raise ValueError(f"unknown suite {name!r}")
