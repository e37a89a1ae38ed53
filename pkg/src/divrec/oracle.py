"""Brute-force divisor sums used as ground truth.

Everything here is trial division or a direct scan; nothing relies on
multiplicativity, so the fast recursions elsewhere cannot share a bug with it.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .numeric import Exponent, NumValue, as_exponent, pow_value


@dataclass(frozen=True)
class FiniteSequence:
    """Prescribed divisors ``a_1..a_k``; order fixes the bit position of each element."""

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elements = tuple(int(a) for a in elements)
        if not elements:
            raise ValueError("sequence must not be empty")
        if any(a < 1 for a in elements):
            raise ValueError(f"sequence elements must be positive: {elements}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def parse(cls, text: str) -> "FiniteSequence":
        return cls(int(part) for part in text.split(",") if part.strip())

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def total(self) -> int:
        return sum(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        return FiniteSequence(self.elements + tuple(other))


def _seq(A) -> FiniteSequence:
    return A if isinstance(A, FiniteSequence) else FiniteSequence(A)


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma_x(n: int, x: Exponent | int | float) -> NumValue:
    """Sum of x-th powers of the divisors of n; 0 when n <= 0."""
    x = as_exponent(x)
    total = x.zero()
    if n <= 0:
        return total
    for d in divisors(n):
        total += pow_value(d, x)
    return total


def sigma_x_A(n: int, A, x: Exponent | int | float) -> NumValue:
    """Sum of a**x over positions of A whose element divides n; duplicates count each time."""
    A, x = _seq(A), as_exponent(x)
    total = x.zero()
    if n <= 0:
        return total
    for a in A:
        if n % a == 0:
            total += pow_value(a, x)
    return total


def v2(n: int) -> int:
    """2-adic valuation (the binary carry sequence)."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    while n % 2 == 0:
        n //= 2
        count += 1
    return count


def sigma_x_pow2_closed(n: int, x: Exponent | int | float) -> NumValue:
    """Divisor sum over the power-of-two divisors of n."""
    x = as_exponent(x)
    total = x.zero()
    for t in range(v2(n) + 1):
        total += pow_value(2**t, x)
    return total
