"""SplitMix64: a 64-bit-state generator whose whole state is the seed.

A failing randomized check can be replayed from ``--rng-seed`` alone, and the
stream is identical on every platform and Python version.

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)                      (all arithmetic mod 2**64)

``randint`` reduces by modulo; the bias is below 2**-50 for the ranges used here.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)


def random_sequence(rng: SplitMix64, max_k: int, max_a: int) -> list[int]:
    """Length uniform in [1, max_k], elements uniform in [1, max_a]; duplicates allowed."""
    k = rng.randint(1, max_k)
    return [rng.randint(1, max_a) for _ in range(k)]
