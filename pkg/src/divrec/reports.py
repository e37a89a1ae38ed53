from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

from .numeric import NumValue, format_value, values_equal

METHODS = ("oracle", "theorem1", "theorem2", "pow2", "closed")


@dataclass
class SigmaTable:
    """Values for n = 1..n_max, tagged with the method that produced them."""

    method: str
    values: list[NumValue]

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> NumValue:
        if n <= 0:
            raise IndexError(n)
        return self.values[n - 1]

    def items(self):
        return enumerate(self.values, start=1)

    def records(self) -> list[dict[str, Any]]:
        return [{"n": n, "value": format_value(v), "method": self.method} for n, v in self.items()]


@dataclass
class VerificationReport:
    suite: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str | Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message() if callable(message) else message)

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"SUITE {self.suite} {status} checked={self.checked}"


def compare_tables(
    suite: str, computed: Iterable[tuple[int, NumValue]], expected: Callable[[int], NumValue], label: str = ""
) -> VerificationReport:
    """Compare ``(n, value)`` pairs against ``expected(n)``, collecting every mismatch."""
    report = VerificationReport(suite)
    prefix = f"{label}: " if label else ""
    for n, value in computed:
        want = expected(n)
        report.record(
            values_equal(value, want),
            lambda n=n, value=value, want=want: f"{prefix}n={n}: got {format_value(value)}, expected {format_value(want)}",
        )
    return report
