"""SplitMix64 stream with rejection-sampled bounded draws.

The generator is fixed to a named public algorithm so corpora regenerate
bit-identically anywhere; bounded draws reject out-of-range values instead
of taking a modulus, which would bias small ranges.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by masked rejection."""
        if n <= 0:
            raise ValueError("bound must be positive")
        bits = (n - 1).bit_length() or 1
        mask = (1 << bits) - 1
        while True:
            value = self.next_u64() & mask
            if value < n:
                return value
