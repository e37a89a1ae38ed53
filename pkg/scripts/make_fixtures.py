#!/usr/bin/env python3
"""Write the bundled b-file fixtures under src/divrec/fixtures.

Each sequence is produced by a method unrelated to the one divrec uses, and
the leading terms are checked against values copied from the OEIS entries.
Run ``divrec verify --suite oeis --refresh-fixtures`` on a networked machine
to replace these with the published b-files.
"""

from __future__ import annotations

from itertools import accumulate
from pathlib import Path

from sympy.utilities.iterables import partitions

OUT = Path(__file__).resolve().parent.parent / "src" / "divrec" / "fixtures"

KNOWN = {
    "A000009": [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64, 76, 89, 104, 122],
    "A036469": [1, 2, 3, 5, 7, 10, 14, 19, 25, 33, 43, 55, 70, 88, 110, 137],
    "A029931": [0, 1, 2, 3, 3, 4, 5, 6, 4, 5, 6, 7, 7, 8, 9, 10, 5],
    "A118462": [1, 2, 3, 4, 5, 8, 6, 9, 16, 7, 10, 17, 32, 11, 12, 18, 33, 64],
    "A007814": [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4],
    "A038712": [1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1, 31],
}


def odd_part_partitions(n_max: int) -> list[int]:
    # distinct parts and odd parts are equinumerous
    counts = [1] + [0] * n_max
    for part in range(1, n_max + 1, 2):
        for w in range(part, n_max + 1):
            counts[w] += counts[w - part]
    return counts


def binary_encodings(count: int) -> list[int]:
    out: list[int] = []
    n = 1
    while len(out) < count:
        block = [
            sum(1 << (part - 1) for part in p)
            for p in (dict(q) for q in partitions(n))
            if all(mult == 1 for mult in p.values())
        ]
        out.extend(sorted(block))
        n += 1
    return out[:count]


def write(sequence_id: str, offset: int, values: list[int]) -> None:
    assert values[: len(KNOWN[sequence_id])] == KNOWN[sequence_id], sequence_id
    lines = [f"# {sequence_id}, generated offline by scripts/make_fixtures.py\n"]
    lines += [f"{offset + i} {v}\n" for i, v in enumerate(values)]
    (OUT / f"b{sequence_id[1:]}.txt").write_text("".join(lines), encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    distinct = odd_part_partitions(1000)
    assert distinct[100] == 444793
    write("A000009", 0, distinct)
    write("A036469", 0, list(accumulate(distinct)))
    write("A029931", 0, [sum(i + 1 for i, bit in enumerate(reversed(bin(n)[2:])) if bit == "1") for n in range(10001)])
    write("A118462", 1, binary_encodings(2000))
    write("A007814", 1, [(n & -n).bit_length() - 1 for n in range(1, 10001)])
    write("A038712", 1, [n ^ (n - 1) for n in range(1, 10001)])


if __name__ == "__main__":
    main()
