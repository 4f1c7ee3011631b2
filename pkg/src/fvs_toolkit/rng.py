"""Deterministic 64-bit random streams.

Every stochastic component of the library (instance generators, pivot
selection in the solvers) draws from the splitmix64 sequence, so a given
seed reproduces the exact same bytes on any platform:

    state'      = (state + 0x9E3779B97F4A7C15) mod 2**64
    output      = mix64(state')
    mix64(z)    : z ^= z >> 30; z *= 0xBF58476D1CE4E5B9 (mod 2**64)
                  z ^= z >> 27; z *= 0x94D049BB133111EB (mod 2**64)
                  z ^= z >> 31

Bounded draws are ``output mod n``.  Probability-p draws compare the raw
output against ``floor(p * 2**64)``.  Substreams are derived from
(seed, path components) with :func:`derive_seed`; mutable state is never
shared between components, which keeps independent trials reproducible.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output finalizer."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *path: int) -> int:
    """Derive a substream seed from a base seed and a path of integers.

    Each path component folds into the state as
    ``s = mix64((s ^ mix64(component)) + GOLDEN)``.  Distinct paths give
    independent-looking streams; the same path always gives the same seed.
    """
    s = seed & _MASK64
    for part in path:
        s = mix64(((s ^ mix64(part & _MASK64)) + _GOLDEN) & _MASK64)
    return s


class SplitMix64:
    """A single splitmix64 stream."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n).  n must be positive."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def coin(self) -> bool:
        return bool(self.next_u64() & 1)

    def chance(self, p: float) -> bool:
        """True with probability p (threshold compare on the raw draw)."""
        if p <= 0.0:
            self.next_u64()
            return False
        threshold = int(p * 2.0**64)
        return self.next_u64() < threshold

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
