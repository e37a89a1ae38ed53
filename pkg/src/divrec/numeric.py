"""Scalar kernel: exponents, d**x terms, binary digit helpers, pentagonal numbers.

Values are plain Python numbers.  Exact mode uses ``int`` and
``fractions.Fraction``; real mode uses ``float``.  The two never meet in a
single computation: :func:`check_compatible` raises instead of coercing.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

NumValue = Union[int, Fraction, float]

REL_TOL = 1e-9


class MixedArithmeticError(TypeError):
    """An exact value and a float were combined."""


class ResourceCapError(RuntimeError):
    """A configured size limit would be exceeded."""


@dataclass(frozen=True)
class Exponent:
    """The power ``x`` applied to each divisor.

    An ``int`` value selects exact arithmetic, a ``float`` value real
    arithmetic.  ``Exponent(2.0)`` is real mode even though it is integral.
    """

    value: int | float

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float)):
            raise TypeError(f"exponent must be int or float, got {self.value!r}")
        if isinstance(self.value, float) and not math.isfinite(self.value):
            raise ValueError(f"exponent must be finite, got {self.value!r}")

    @classmethod
    def parse(cls, text: str) -> "Exponent":
        try:
            return cls(int(text))
        except ValueError:
            return cls(float(text))

    @property
    def exact(self) -> bool:
        return isinstance(self.value, int)

    def zero(self) -> NumValue:
        return 0 if self.exact else 0.0

    def __str__(self):
        return str(self.value)


def as_exponent(x: Exponent | int | float) -> Exponent:
    return x if isinstance(x, Exponent) else Exponent(x)


def is_exact(v: NumValue) -> bool:
    return isinstance(v, (int, Fraction))


def check_compatible(a: NumValue, b: NumValue) -> None:
    if is_exact(a) != is_exact(b):
        raise MixedArithmeticError(f"cannot mix {type(a).__name__} and {type(b).__name__}")


def values_equal(a: NumValue, b: NumValue, rel_tol: float = REL_TOL) -> bool:
    """Bit-exact equality for exact values, relative tolerance for floats."""
    check_compatible(a, b)
    if is_exact(a):
        return a == b
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=rel_tol)


def combine(terms: Iterable[tuple[int, NumValue]], x: Exponent) -> NumValue:
    """``sum(c * p)`` over integer coefficients and powers; fsum in real mode."""
    if x.exact:
        return sum((c * p for c, p in terms if c), 0)
    return math.fsum(c * p for c, p in terms if c)


def format_value(v: NumValue) -> str:
    """Decimal integer, ``p/q``, or a fixed-notation float with 12 significant digits."""
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return str(v)
    text = format(Decimal(f"{v:.12g}"), "f")
    return "0" if text in ("-0", "0") else text


def parse_value(text: str) -> NumValue:
    """Inverse of :func:`format_value` for exact values; floats parse as float."""
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return float(text)


def popcount(n: int) -> int:
    if n < 0:
        raise ValueError("popcount of a negative number")
    return bin(n).count("1")


def thue_morse_sign(n: int) -> int:
    return -1 if popcount(n) & 1 else 1


def pow_value(base: int, x: Exponent | int | float) -> NumValue:
    """``base ** x``: int for x >= 0, Fraction for x < 0, float for real x."""
    if base < 1:
        raise ValueError(f"base must be positive, got {base}")
    x = as_exponent(x)
    if not x.exact:
        return math.exp(x.value * math.log(base))
    if x.value >= 0:
        return base**x.value
    return Fraction(1, base ** (-x.value))


@dataclass(frozen=True)
class PentagonalTerm:
    value: int
    m: int
    branch: str  # "minus": m(3m-1)/2, "plus": m(3m+1)/2
    sign: int  # (-1)**(m-1)


def _pentagonal(m: int, branch: str) -> PentagonalTerm:
    delta = -1 if branch == "minus" else 1
    return PentagonalTerm(m * (3 * m + delta) // 2, m, branch, 1 if m % 2 else -1)


def pentagonal_stream(limit: int) -> list[PentagonalTerm]:
    """Generalized pentagonal numbers up to ``limit`` in increasing order: 1, 2, 5, 7, 12, 15, ..."""
    if limit < 1:
        raise ValueError("limit must be positive")
    terms = []
    m = 1
    while True:
        for branch in ("minus", "plus"):
            term = _pentagonal(m, branch)
            if term.value > limit:
                return terms
            terms.append(term)
        m += 1


def pentagonal_classify(n: int) -> PentagonalTerm | None:
    """Return the term with value ``n`` if ``n`` is a generalized pentagonal number."""
    if n < 1:
        raise ValueError("n must be positive")
    # n = m(3m -+ 1)/2  <=>  24n + 1 = (6m -+ 1)**2
    disc = 24 * n + 1
    root = math.isqrt(disc)
    if root * root != disc:
        return None
    if (root + 1) % 6 == 0:
        return _pentagonal((root + 1) // 6, "minus")
    if (root - 1) % 6 == 0:
        return _pentagonal((root - 1) // 6, "plus")
    return None
