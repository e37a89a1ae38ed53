"""Partitions into distinct parts and the pentagonal recursion for sigma_x.

A partition into distinct parts is encoded as ``j = sum(2**(i-1) for i in parts)``.
``eta(j)`` recovers the partitioned number, and ``e_n`` is the set of
encodings with ``eta(j) == n``.  The compensating term of the pentagonal
recursion is

    h_x(n) = sum over j in e_n of (-1)**(popcount(j) - 1) * sum(i**x for part i of j)

Three evaluation routes exist for ``h_x``: a signed subset-sum table over the
parts ``1..n`` (default, no enumeration, ``RECURSION_CAP``), direct enumeration of ``e_n``, and
the ``W``/``T`` indexing into the concatenated encoding sequence.  The last two
enumerate partitions and are bounded by ``PARTITION_CAP``.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

import numpy as np

from .associated import compensating_coefficients, evaluate_rows, run_linear_recursion
from .numeric import (
    Exponent,
    NumValue,
    ResourceCapError,
    as_exponent,
    pentagonal_classify,
    pentagonal_stream,
    popcount,
    pow_value,
)
from .reports import SigmaTable

PARTITION_CAP = 120
RECURSION_CAP = 5000


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise ResourceCapError(f"{what}: n={n} exceeds cap {cap}")


@dataclass(frozen=True)
class DistinctPartition:
    parts: tuple[int, ...]  # strictly increasing
    encoding: int

    @classmethod
    def from_encoding(cls, j: int) -> "DistinctPartition":
        if j < 1:
            raise ValueError("encoding must be positive")
        return cls(tuple(i + 1 for i in range(j.bit_length()) if j >> i & 1), j)

    @classmethod
    def from_parts(cls, parts) -> "DistinctPartition":
        parts = tuple(sorted(parts))
        if not parts or parts[0] < 1 or len(set(parts)) != len(parts):
            raise ValueError(f"not a partition into distinct positive parts: {parts}")
        return cls(parts, sum(1 << (i - 1) for i in parts))

    @property
    def part_count(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)


def eta(j: int) -> int:
    """Sum of the 1-based positions of the set bits of j."""
    if j < 1:
        raise ValueError("j must be positive")
    total = 0
    position = 1
    while j:
        if j & 1:
            total += position
        j >>= 1
        position += 1
    return total


def b_n_x(j: int, x: Exponent | int | float) -> NumValue:
    """Sum of i**x over the parts i encoded by j."""
    if j < 1:
        raise ValueError("j must be positive")
    x = as_exponent(x)
    total = x.zero()
    part = 1
    while j:
        if j & 1:
            total += pow_value(part, x)
        j >>= 1
        part += 1
    return total


def distinct_partitions(n: int, cap: int = PARTITION_CAP) -> list[int]:
    """The set e_n: encodings of all partitions of n into distinct parts, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    _check_cap(n, cap, "distinct_partitions")
    found = []

    def walk(remaining: int, below: int, encoding: int) -> None:
        # parts chosen so far are >= below; next part is < below
        if remaining == 0:
            found.append(encoding)
            return
        for part in range(min(remaining, below - 1), 0, -1):
            if part * (part + 1) // 2 < remaining:
                break
            walk(remaining - part, part, encoding | 1 << (part - 1))

    walk(n, n + 1, 0)
    return sorted(found)


def _ascending_encodings(n: int, bound: int) -> Iterator[int]:
    """Encodings of partitions of n into distinct parts < bound, in increasing order.

    The largest part dominates the encoding, so iterating it upwards and
    recursing on the rest yields sorted output without a sort.
    """
    if n == 0:
        yield 0
        return
    for largest in range(1, min(n, bound - 1) + 1):
        rest = n - largest
        if rest <= largest * (largest - 1) // 2:
            for tail in _ascending_encodings(rest, largest):
                yield tail | 1 << (largest - 1)


@lru_cache(maxsize=None)
def _block(n: int) -> tuple[int, ...]:
    return tuple(_ascending_encodings(n, n + 1))


@lru_cache(maxsize=8)
def parity_counts(n_max: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Numbers of partitions of 0..n_max into an even / odd number of distinct parts.

    0/1 knapsack over parts 1..n_max carrying the parity of the part count.
    """
    # object arrays: the counts outgrow int64 past n ~ 400
    even = np.zeros(n_max + 1, dtype=object)
    odd = np.zeros(n_max + 1, dtype=object)
    even[0] = 1
    for part in range(1, n_max + 1):
        with_even, with_odd = even[part:] + odd[:-part], odd[part:] + even[:-part]
        even[part:], odd[part:] = with_even, with_odd
    return tuple(even.tolist()), tuple(odd.tolist())


def _counts_covering(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # entries <= n do not depend on the table size, so round up to reuse the cache
    return parity_counts(max(256, 1 << (n - 1).bit_length()))


def pe_po(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    even, odd = _counts_covering(n)
    return even[n], odd[n]


def R(n: int) -> int:
    """Number of partitions of n into distinct parts."""
    if n < 1:
        raise ValueError("n must be positive")
    even, odd = _counts_covering(n)
    return even[n] + odd[n]


def T(n: int) -> int:
    """R(1) + ... + R(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    even, odd = _counts_covering(n)
    return sum(even[1 : n + 1]) + sum(odd[1 : n + 1])


def W(m: int, cap: int = PARTITION_CAP) -> int:
    """m-th term of e_1, e_2, e_3, ... concatenated, each block ascending."""
    if m < 1:
        raise ValueError("m must be positive")
    totals = cumulative_counts(cap)
    n = bisect_left(totals, m) + 1
    _check_cap(n, cap, "W")
    before = totals[n - 2] if n > 1 else 0
    return _block(n)[m - before - 1]


def W_prefix(count: int, cap: int = PARTITION_CAP) -> list[int]:
    """W(1..count) without re-scanning the blocks for each term."""
    out: list[int] = []
    n = 1
    while len(out) < count:
        _check_cap(n, cap, "W")
        out.extend(_block(n))
        n += 1
    return out[:count]


def _term_sign(j: int) -> int:
    return 1 if popcount(j) % 2 else -1


def h_x_terms(n: int, x: Exponent | int | float, method: str = "enumerate", cap: int = PARTITION_CAP):
    """Signed summands of h_x(n), one per partition of n into distinct parts.

    ``enumerate`` walks e_n directly; ``w_index`` reads W(T(n) - m) for
    m = 0..R(n)-1, i.e. e_n from its largest encoding down.
    """
    x = as_exponent(x)
    _check_cap(n, cap, "h_x_terms")
    if method == "enumerate":
        encodings = distinct_partitions(n, cap)
    elif method == "w_index":
        t_n = T(n)
        encodings = [W(t_n - m, cap) for m in range(R(n))]
    else:
        raise ValueError(f"unknown method {method!r}")
    return [(j, _term_sign(j), b_n_x(j, x)) for j in encodings]


@lru_cache(maxsize=8)
def _h_rows(n_max: int) -> dict[int, list[int]]:
    return compensating_coefficients(range(1, n_max + 1), n_max)


def h_x_table(x: Exponent | int | float, n_max: int, cap: int = RECURSION_CAP) -> list[NumValue]:
    """h_x(1..n_max) from the signed subset-sum table over parts 1..n_max.

    No partition is enumerated: the signed count of subsets of {1..n} with a
    given sum containing a given part is read off the truncated product
    ``prod(1 - q**i)``.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    _check_cap(n_max, cap, "h_x_table")
    return evaluate_rows(_h_rows(n_max), as_exponent(x), n_max)


def h_x(n: int, x: Exponent | int | float, method: str = "profile", cap: int | None = None) -> NumValue:
    if n < 1:
        raise ValueError("n must be positive")
    x = as_exponent(x)
    if method == "profile":
        return h_x_table(x, n, RECURSION_CAP if cap is None else cap)[-1]
    total = x.zero()
    for _, sign, value in h_x_terms(n, x, method, PARTITION_CAP if cap is None else cap):
        total += sign * value
    return total


@lru_cache(maxsize=8)
def _theorem2_rows(n_max: int) -> dict[int, list[int]]:
    offsets = [(t.value, t.sign) for t in pentagonal_stream(n_max)]
    return run_linear_recursion(_h_rows(n_max), offsets, n_max)


def theorem2_table(x: Exponent | int | float, n_max: int, cap: int = RECURSION_CAP) -> SigmaTable:
    """sigma_x(1..n_max) via sigma_x(n) = h_x(n) + sum sign_m * sigma_x(n - v_m).

    Only pentagonal offsets v_m < n contribute since sigma(m <= 0) = 0.  The
    recursion runs on the integer coefficient of each i**x and is evaluated
    for ``x`` at the end.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    _check_cap(n_max, cap, "theorem2_table")
    return SigmaTable("theorem2", evaluate_rows(_theorem2_rows(n_max), as_exponent(x), n_max))


def partition_compensator(n: int) -> int:
    """h^(p)(n): (-1)**(m-1) at pentagonal n, else 0."""
    term = pentagonal_classify(n)
    return term.sign if term else 0


def partition_count_table(n_max: int) -> list[int]:
    """p(1..n_max) from the pentagonal recursion with p(0) = 0 and a compensating term."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    offsets = [(t.value, t.sign) for t in pentagonal_stream(n_max)]
    p = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        total = partition_compensator(n)
        for v, sign in offsets:
            if v >= n:
                break
            total += sign * p[n - v]
        p[n] = total
    return p[1:]


def partition_count_dp(n_max: int) -> list[int]:
    """p(0..n_max) by the unbounded coin-change count, p(0) = 1."""
    p = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for w in range(part, n_max + 1):
            p[w] += p[w - part]
    return p


def lahiri_g(n: int, x: Exponent | int | float, cap: int = RECURSION_CAP) -> NumValue:
    """Compensating term under the convention sigma(0) = n instead of 0.

    Differs from h_x(n) only at pentagonal n = v_m, where the recursion picks
    up the extra summand (-1)**(m-1) * n.
    """
    x = as_exponent(x)
    h = h_x(n, x, cap=cap)
    term = pentagonal_classify(n)
    if term is None:
        return h
    return h - term.sign * (n if x.exact else float(n))


@lru_cache(maxsize=16)
def cumulative_counts(n_max: int) -> tuple[int, ...]:
    """T(1..n_max)."""
    even, odd = _counts_covering(n_max)
    return tuple(accumulate(even[n] + odd[n] for n in range(1, n_max + 1)))
