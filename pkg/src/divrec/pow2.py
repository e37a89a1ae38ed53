"""Divisor sums restricted to powers of two.

For ``A = [1, 2, 4, ...]`` the weight of index ``i`` collapses to ``i - 1``,
so exactly one index has weight ``n`` and the recursion becomes a
convolution with the Thue-Morse signs:

    sigma_A(n) = h(n) - sum_{j=1}^{n-1} (-1)**s(n-j) * sigma_A(j)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numeric import Exponent, NumValue, as_exponent, popcount, pow_value, thue_morse_sign
from .oracle import sigma_x_pow2_closed
from .reports import SigmaTable, VerificationReport
from .associated import evaluate_rows


@dataclass(frozen=True)
class Pow2Expansion:
    n: int
    exponents: tuple[int, ...]  # alpha_1 < ... < alpha_m with n = sum 2**(alpha - 1)

    @classmethod
    def of(cls, n: int) -> "Pow2Expansion":
        if n < 1:
            raise ValueError("n must be positive")
        return cls(n, tuple(i + 1 for i in range(n.bit_length()) if n >> i & 1))

    @property
    def m(self) -> int:
        return len(self.exponents)


def h_pow2(n: int, x: Exponent | int | float) -> NumValue:
    """t(2n+1) * sum 2**((alpha-1) x), with t(2n+1) = -t(n)."""
    x = as_exponent(x)
    total = x.zero()
    for alpha in Pow2Expansion.of(n).exponents:
        total += pow_value(2 ** (alpha - 1), x)
    return -thue_morse_sign(n) * total


def thue_morse_signs(count: int) -> np.ndarray:
    """(-1)**s(m) for m = 0..count-1."""
    signs = np.ones(count, dtype=np.int64)
    for m in range(1, count):
        signs[m] = -signs[m >> 1] if m & 1 else signs[m >> 1]
    return signs


def _recursion_rows(n_max: int) -> dict[int, list[int]]:
    """Run the recursion on the integer coefficient of each 2**(t x)."""
    signs = thue_morse_signs(n_max + 1)
    rows = {}
    for t in range(n_max.bit_length()):
        values = np.zeros(n_max + 1, dtype=np.int64)
        for n in range(1, n_max + 1):
            seed = -signs[n] if n >> t & 1 else 0
            # signs[n-1], ..., signs[1] paired with values[1], ..., values[n-1]
            values[n] = seed - int(np.dot(signs[n - 1 : 0 : -1], values[1:n]))
        rows[2**t] = [int(v) for v in values]
    return rows


def sigma_pow2_recursion(x: Exponent | int | float, n_max: int) -> SigmaTable:
    """sigma over power-of-two divisors, n = 1..n_max, from the Thue-Morse recursion."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    return SigmaTable("pow2", evaluate_rows(_recursion_rows(n_max), as_exponent(x), n_max))


def closed_table(x: Exponent | int | float, n_max: int) -> SigmaTable:
    return SigmaTable("closed", [sigma_x_pow2_closed(n, x) for n in range(1, n_max + 1)])


def _check_identity(name: str, n_max: int, x: int, rhs) -> VerificationReport:
    report = VerificationReport(name)
    signs = thue_morse_signs(n_max + 1)
    sigma = np.array([0] + [sigma_x_pow2_closed(n, x) for n in range(1, n_max + 1)], dtype=np.int64)
    for n in range(1, n_max + 1):
        lhs = int(np.dot(signs[n - 1 :: -1], sigma[1 : n + 1]))
        want = rhs(n)
        report.record(lhs == want, lambda n=n, lhs=lhs, want=want: f"n={n}: lhs {lhs} != rhs {want}")
    return report


def check_identity_66(n_max: int) -> VerificationReport:
    """sum_{j<=n} (-1)**s(n-j) sigma_0(j) == (-1)**(s(n)-1) s(n)."""
    return _check_identity("id66", n_max, 0, lambda n: -thue_morse_sign(n) * popcount(n))


def check_identity_67(n_max: int) -> VerificationReport:
    """sum_{j<=n} (-1)**s(n-j) sigma_1(j) == (-1)**(s(n)-1) n."""
    return _check_identity("id67", n_max, 1, lambda n: -thue_morse_sign(n) * n)
