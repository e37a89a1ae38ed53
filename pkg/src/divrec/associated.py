"""Signed subset-sum recursion for divisor sums over a finite sequence.

Index ``i`` of the associated sequence picks the subset of ``A`` whose
positions are the set bits of ``i - 1``.  Each subset contributes its weight
(sum of elements), its value (sum of ``a**x``) and the sign
``t(2i-1) = -(-1)**popcount(i-1)``.  The recursion

    sigma_A(n) = h_A(n) + sum_{i>=2} t(2i-1) * sigma_A(n - weight_i)

only needs the weights, so the table builder folds the 2**k indices into a
``weight -> signed count`` map (the coefficients of ``prod(1 - q**a)``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .numeric import (
    Exponent,
    NumValue,
    ResourceCapError,
    as_exponent,
    combine,
    popcount,
    pow_value,
    thue_morse_sign,
)
from .oracle import FiniteSequence, _seq, sigma_x_A
from .reports import SigmaTable, VerificationReport, compare_tables

MAX_K = 62
WEIGHT_CAP = 2**26
_INT64_HEADROOM = 2**61
_CHUNK = 256  # bases per int64 block


@dataclass(frozen=True)
class AssociatedTerm:
    index: int
    mask: int  # bit j-1 set <=> a_j is in the subset
    weight: int
    value: NumValue
    sign: int

    def positions(self) -> list[int]:
        """1-based positions of the selected elements."""
        return [j + 1 for j in range(self.mask.bit_length()) if self.mask >> j & 1]


def _check_k(A: FiniteSequence) -> None:
    if A.k > MAX_K:
        raise ResourceCapError(f"sequence length {A.k} exceeds the mask width limit {MAX_K}")


def index_sign(i: int) -> int:
    """t(2i-1), computed as -t(i-1)."""
    return -thue_morse_sign(i - 1)


def _term(A: FiniteSequence, mask: int, x: Exponent) -> AssociatedTerm:
    weight = 0
    value = x.zero()
    for j, a in enumerate(A.elements):
        if mask >> j & 1:
            weight += a
            value += pow_value(a, x)
    return AssociatedTerm(mask + 1, mask, weight, value, -1 if popcount(mask) % 2 == 0 else 1)


def term_of_index(i: int, A, x: Exponent | int | float = 1) -> AssociatedTerm:
    A, x = _seq(A), as_exponent(x)
    _check_k(A)
    if not 1 <= i <= 2**A.k:
        raise IndexError(f"index {i} outside [1, {2**A.k}]")
    return _term(A, i - 1, x)


def terms_with_weight(A, n: int, x: Exponent | int | float = 1) -> list[AssociatedTerm]:
    """All terms with index >= 2 whose subset sums to ``n``, sorted by index.

    Depth-first over the elements in descending order, abandoning a branch
    once the untried elements can no longer reach ``n``.  Cost is
    proportional to the number of matching subsets plus pruned branches, so
    long sequences with small ``n`` stay cheap while ``n`` near ``sum(A)/2``
    for large ``k`` does not.
    """
    A, x = _seq(A), as_exponent(x)
    _check_k(A)
    if n < 1:
        return []
    order = sorted(range(A.k), key=lambda j: -A.elements[j])
    values = [A.elements[j] for j in order]
    suffix = [0] * (len(order) + 1)
    for pos in range(len(order) - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] + values[pos]

    masks = []

    def walk(pos: int, remaining: int, mask: int) -> None:
        if remaining == 0:
            masks.append(mask)
            return
        if pos == len(order) or suffix[pos] < remaining:
            return
        if values[pos] <= remaining:
            walk(pos + 1, remaining - values[pos], mask | 1 << order[pos])
        walk(pos + 1, remaining, mask)

    walk(0, n, 0)
    return [_term(A, mask, x) for mask in sorted(masks)]


def compensating_h_A(n: int, A, x: Exponent | int | float) -> NumValue:
    A, x = _seq(A), as_exponent(x)
    total = x.zero()
    if n > A.total:
        return total
    for term in terms_with_weight(A, n, x):
        total += term.sign * term.value
    return total


def signed_product(A, limit: int, cap: int = WEIGHT_CAP) -> list[int]:
    """Coefficients 0..limit of prod(1 - q**a for a in A).

    Entry ``w`` is the sum of ``(-1)**|S|`` over subsets ``S`` of ``A`` with
    weight ``w``, so ``-entry`` is the aggregated sign of all indices
    ``i >= 2`` of weight ``w``.  Built as a signed 0/1 knapsack: ``O(k * limit)``
    rather than ``O(2**k)``.
    """
    A = _seq(A)
    if limit + 1 > cap:
        raise ResourceCapError(f"weight range {limit + 1} exceeds cap {cap}")
    coeffs = np.zeros(limit + 1, dtype=np.int64)
    coeffs[0] = 1
    for j, a in enumerate(A.elements):
        if a <= limit:
            coeffs[a:] = coeffs[a:] - coeffs[: limit + 1 - a]
        if np.abs(coeffs).max() > _INT64_HEADROOM:
            return _signed_product_exact(A.elements, limit, coeffs.tolist(), j + 1)
    return coeffs.tolist()


def _signed_product_exact(elements, limit, coeffs, done):
    # finish in Python integers once int64 headroom runs out
    for a in elements[done:]:
        for w in range(limit, a - 1, -1):
            coeffs[w] -= coeffs[w - a]
    return coeffs


def weight_profile(A, limit: int, cap: int = WEIGHT_CAP) -> dict[int, int]:
    """``weight -> sum of t(2i-1)`` over indices i >= 2, zero classes omitted."""
    coeffs = signed_product(A, limit, cap)
    return {w: -c for w, c in enumerate(coeffs) if w and c}


def compensating_coefficients(A, limit: int, cap: int = WEIGHT_CAP) -> dict[int, list[int]]:
    """Integer coefficients of ``b**x`` in h_A(0..limit), one list per distinct element b.

    A subset containing a copy of ``b`` is that copy plus a subset of the
    remaining elements, and adding the copy flips ``(-1)**|S|`` while
    ``t(2i-1) = -(-1)**|S|``; the two signs cancel.  Removing one copy of
    ``b`` from the product divides it by ``1 - q**b``, which is the running
    sum ``rest[m] = full[m] + rest[m - b]``.
    """
    A = _seq(A)
    full = signed_product(A, limit, cap)
    largest = max(map(abs, full))
    packed = np.array(full, dtype=np.int64) if largest <= _INT64_HEADROOM // (limit + 1) else None
    out = {}
    for b, mult in sorted(Counter(A.elements).items()):
        if packed is not None:
            # running sum with stride b: cumsum down each residue class
            padded = np.zeros(-(-(limit + 1) // b) * b, dtype=np.int64)
            padded[: limit + 1] = packed
            rest = padded.reshape(-1, b).cumsum(axis=0).ravel()[: limit + 1].tolist()
        else:
            rest = [0] * (limit + 1)
            for m in range(limit + 1):
                rest[m] = full[m] + (rest[m - b] if m >= b else 0)
        out[b] = [0] * min(b, limit + 1) + [mult * rest[n - b] for n in range(b, limit + 1)]
    return out


def run_linear_recursion(
    seeds: dict[int, list[int]], shifts: list[tuple[int, int]], n_max: int
) -> dict[int, dict[int, int]]:
    """Solve ``s(n) = seed(n) + sum c * s(n - w)`` with ``s(m <= 0) = 0`` per basis element.

    ``shifts`` must be sorted by ``w``.  Values are exact integers; the
    caller evaluates them against ``b**x`` once at the end, so rounding never
    feeds back into the recursion.  Rows come back sparse, ``{n: value}``.

    Bases are solved together in int64 blocks while every value stays inside
    a bound that rules out overflow; a block that leaves it is redone with
    Python integers.
    """
    weight = sum(abs(c) for _, c in shifts)
    bases = list(seeds)
    out = {}
    for start in range(0, len(bases), _CHUNK):
        block = bases[start : start + _CHUNK]
        rows = _recursion_int64(seeds, block, shifts, weight, n_max)
        out.update(rows if rows is not None else _recursion_exact(seeds, block, shifts, n_max))
    return out


def _recursion_int64(seeds, block, shifts, weight, n_max):
    # |values| <= bound and |seed| <= bound keep every partial sum below 2**62
    bound = _INT64_HEADROOM // (weight + 1)
    try:
        seed = np.array([seeds[b][: n_max + 1] for b in block], dtype=np.int64).T
    except OverflowError:
        return None
    if seed.size and np.abs(seed).max() > bound:
        return None
    ws = np.array([w for w, _ in shifts], dtype=np.int64)
    cs = np.array([c for _, c in shifts], dtype=np.int64)
    values = np.zeros_like(seed)
    live = np.flatnonzero(seed.any(axis=1))
    k = 0
    for n in range(int(live[0]) if live.size else n_max + 1, n_max + 1):
        while k < len(ws) and ws[k] < n:
            k += 1
        column = seed[n] + cs[:k] @ values[n - ws[:k]]
        if np.abs(column).max() > bound:
            return None
        values[n] = column
    return {b: {int(n): int(values[n, j]) for n in np.flatnonzero(values[:, j])} for j, b in enumerate(block)}


def _recursion_exact(seeds, block, shifts, n_max):
    out = {}
    for b in block:
        seed = seeds[b]
        values = [0] * (n_max + 1)
        for n in range(1, n_max + 1):
            total = seed[n]
            for w, c in shifts:
                if w >= n:
                    break
                total += c * values[n - w]
            values[n] = total
        out[b] = {n: v for n, v in enumerate(values) if v}
    return out


def evaluate_rows(rows: dict, x: Exponent, n_max: int) -> list[NumValue]:
    """``sum(rows[b][n] * b**x)`` for n = 1..n_max; rows are lists or sparse ``{n: c}``."""
    buckets = [[] for _ in range(n_max + 1)]
    for b, row in rows.items():
        power = pow_value(b, x)
        for n, c in row.items() if isinstance(row, dict) else enumerate(row):
            if c and 0 < n <= n_max:
                buckets[n].append((int(c), power))
    return [combine(buckets[n], x) for n in range(1, n_max + 1)]


@lru_cache(maxsize=256)
def _theorem1_rows(elements: tuple[int, ...], n_max: int, cap: int) -> dict[int, list[int]]:
    full = signed_product(elements, n_max, cap)
    shifts = [(w, -c) for w, c in enumerate(full) if w and c]
    return run_linear_recursion(compensating_coefficients(elements, n_max, cap), shifts, n_max)


def theorem1_table(A, x: Exponent | int | float, n_max: int, cap: int = WEIGHT_CAP) -> SigmaTable:
    """sigma_A(1..n_max) from the signed recursion alone, with sigma_A(m <= 0) = 0.

    The recursion is linear with integer coefficients, so it is run once on
    the coefficient of each ``b**x`` and evaluated for the requested ``x``
    afterwards.  Real exponents therefore incur a single rounding step per
    output value.
    """
    A, x = _seq(A), as_exponent(x)
    if n_max < 1:
        raise ValueError("n_max must be positive")
    _check_k(A)
    rows = _theorem1_rows(A.elements, n_max, cap)
    return SigmaTable("theorem1", evaluate_rows(rows, x, n_max))


def verify_theorem1(A, x: Exponent | int | float, n_max: int) -> VerificationReport:
    A, x = _seq(A), as_exponent(x)
    table = theorem1_table(A, x, n_max)
    return compare_tables(
        "theorem1", table.items(), lambda n: sigma_x_A(n, A, x), label=f"A={list(A)} x={x}"
    )
