"""OEIS b-files: parsing, emission, bundled fixtures and cross-checks."""

from __future__ import annotations

import os
import urllib.request
from collections.abc import Callable
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .oracle import sigma_x_pow2_closed, v2
from .partitions import R, T, W_prefix, eta
from .reports import VerificationReport

BASE_URL_ENV = "DIVREC_OEIS_BASE_URL"
FIXTURE_DIR_ENV = "DIVREC_FIXTURE_DIR"
DEFAULT_BASE_URL = "https://oeis.org"
FETCH_TIMEOUT = 10.0


class BFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class BFile:
    sequence_id: str
    entries: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not (len(self.sequence_id) == 7 and self.sequence_id[0] == "A" and self.sequence_id[1:].isdigit()):
            raise ValueError(f"bad sequence id {self.sequence_id!r}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    @property
    def last_index(self) -> int:
        return self.entries[-1][0]


def parse_bfile(text: str, sequence_id: str = "A000000") -> BFile:
    entries: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"expected 'index value', got {line!r}", lineno)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"non-integer field in {line!r}", lineno) from None
        if entries and index <= entries[-1][0]:
            raise BFileError(f"index {index} does not increase", lineno)
        entries.append((index, value))
    return BFile(sequence_id, entries)


def emit_bfile(bfile: BFile) -> str:
    return "".join(f"{index} {value}\n" for index, value in bfile.entries)


@dataclass(frozen=True)
class SequenceRule:
    """How fixture index ``i`` maps onto a computed quantity.

    Indices below ``first`` are present in the OEIS data but outside the
    domain of the computed function and are skipped.
    """

    sequence_id: str
    first: int
    description: str
    compute: Callable[[int, int], list[int]]  # (first, last) -> values


def _pointwise(fn: Callable[[int], int]) -> Callable[[int, int], list[int]]:
    return lambda first, last: [fn(i) for i in range(first, last + 1)]


def _w_range(first: int, last: int) -> list[int]:
    return W_prefix(last, cap=10_000)[first - 1 :]


REGISTRY: dict[str, SequenceRule] = {
    rule.sequence_id: rule
    for rule in (
        # a(0) = 0 is the empty encoding, outside eta's domain
        SequenceRule("A029931", 1, "eta(j), sum of bit positions of j", _pointwise(eta)),
        SequenceRule("A118462", 1, "W(m), encodings of distinct partitions by weight", _w_range),
        # a(0) = 1 counts the empty partition
        SequenceRule("A000009", 1, "R(n), partitions into distinct parts", _pointwise(R)),
        SequenceRule("A036469", 1, "T(n) + 1, partial sums of A000009 from n = 0", _pointwise(lambda n: T(n) + 1)),
        SequenceRule("A007814", 1, "v2(n), the binary carry sequence", _pointwise(v2)),
        SequenceRule("A038712", 1, "sum of power-of-two divisors of n", _pointwise(lambda n: sigma_x_pow2_closed(n, 1))),
    )
}


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("divrec") / "fixtures"))


def fixture_path(sequence_id: str) -> Path:
    return fixture_dir() / f"b{sequence_id[1:]}.txt"


def load_fixture(sequence_id: str) -> BFile:
    path = fixture_path(sequence_id)
    if not path.exists():
        raise FileNotFoundError(f"no bundled fixture for {sequence_id} at {path}")
    return parse_bfile(path.read_text(encoding="utf-8"), sequence_id)


def cross_check(sequence_id: str, bfile: BFile | None = None) -> VerificationReport:
    """Compare the registered generator with the fixture over its whole index range."""
    rule = REGISTRY[sequence_id]
    bfile = bfile if bfile is not None else load_fixture(sequence_id)
    report = VerificationReport(f"oeis:{sequence_id}")
    wanted = [(i, v) for i, v in bfile.entries if i >= rule.first]
    if not wanted:
        return report
    first, last = wanted[0][0], wanted[-1][0]
    computed = dict(zip(range(first, last + 1), rule.compute(first, last)))
    for index, value in wanted:
        got = computed[index]
        report.record(got == value, lambda i=index, g=got, v=value: f"{sequence_id}({i}): computed {g}, fixture {v}")
    return report


def bfile_url(sequence_id: str, base_url: str | None = None) -> str:
    base = (base_url or os.environ.get(BASE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
    return f"{base}/{sequence_id}/b{sequence_id[1:]}.txt"


def fetch_bfile(sequence_id: str, base_url: str | None = None, timeout: float = FETCH_TIMEOUT) -> BFile:
    with urllib.request.urlopen(bfile_url(sequence_id, base_url), timeout=timeout) as response:
        return parse_bfile(response.read().decode("utf-8"), sequence_id)


def refresh_fixture(sequence_id: str, max_terms: int | None = None, base_url: str | None = None) -> Path:
    """Download a b-file and overwrite the fixture, keeping at most ``max_terms`` entries."""
    bfile = fetch_bfile(sequence_id, base_url)
    if max_terms is not None:
        bfile.entries = bfile.entries[:max_terms]
    path = fixture_path(sequence_id)
    path.write_text(emit_bfile(bfile), encoding="utf-8")
    return path
