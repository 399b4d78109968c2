"""Portable, seedable random streams.

The generator is SplitMix64 (Steele, Lea & Flood, 2014): a 64-bit state
advanced by the golden-ratio increment and passed through a fixed mixing
function. It is implemented with plain integers so every platform and
every numpy version produces the same draws.

Streams are derived from a path of integers, normally
``(seed, sentence_index, variant_index)``::

    h = mix(seed + GOLDEN)
    for k in path:
        h = mix(mix(h + GOLDEN) ^ (k + GOLDEN))

and ``h`` becomes the initial state. Distinct paths give statistically
independent streams, so work can be split across threads in any order
without changing the output.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_TWO64 = 1 << 64
_INV53 = 1.0 / (1 << 53)


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class RngStream:
    """A SplitMix64 stream. Mutable: every draw advances the state."""

    __slots__ = ("state",)

    def __init__(self, state: int = 0):
        self.state = state & MASK64

    @classmethod
    def derive(cls, seed: int, *path: int) -> "RngStream":
        h = mix64((seed + GOLDEN) & MASK64)
        for k in path:
            h = mix64(mix64((h + GOLDEN) & MASK64) ^ ((k + GOLDEN) & MASK64))
        return cls(h)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in ``[0, n)``, by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = _TWO64 - (_TWO64 % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 bits of precision."""
        return (self.next_u64() >> 11) * _INV53

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.randbelow(len(seq))]
