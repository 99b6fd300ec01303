"""Seeded PRNG used everywhere randomness is needed.

SplitMix64 with a fixed draw discipline: identical seeds produce identical
streams on every platform, which is what makes generated graphs and kernel
runs byte-reproducible.  Floats come from the top 53 bits of each output
(``(z >> 11) * 2**-53``) so they are exact dyadic rationals in [0, 1).

``Prng`` is the scalar reference; ``UniformStream`` drains the *same*
stream through numpy-batched mixing for hot loops (the SplitMix64 state
after k steps is just ``seed + k*GOLDEN mod 2**64``, so outputs are a pure
function of the step index and can be vectorized without changing a bit).
"""

from __future__ import annotations

import numpy as np

from .core import GraphBenchError

__all__ = ["Prng", "UniformStream", "ZeroRangeError"]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TO_UNIT = 2.0 ** -53


class ZeroRangeError(GraphBenchError):
    """uniform_int called with an empty range."""


class Prng:
    """Scalar SplitMix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        """Advance one step and return the mixed 64-bit output."""
        self.state = s = (self.state + _GOLDEN) & _MASK64
        z = ((s ^ (s >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform_real(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next_u64() >> 11) * _TO_UNIT

    def uniform_int(self, k: int) -> int:
        """Uniform integer in [0, k); requires k >= 1."""
        if k <= 0:
            raise ZeroRangeError(f"uniform_int range must be positive, got {k}")
        return int(self.uniform_real() * k)


class UniformStream:
    """Batched drain of a SplitMix64 stream as uniform_real values.

    Consumes the stream in exactly the same order as repeated
    ``Prng.uniform_real()`` calls with the same seed; only the mixing is
    vectorized.
    """

    __slots__ = ("seed", "_steps", "_buf", "_pos")

    CHUNK = 1 << 19

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._steps = 0
        self._buf: list[float] = []
        self._pos = 0

    def _refill(self) -> None:
        idx = np.arange(self._steps + 1, self._steps + self.CHUNK + 1,
                        dtype=np.uint64)
        s = np.uint64(self.seed) + idx * np.uint64(_GOLDEN)
        z = s ^ (s >> np.uint64(30))
        z = z * np.uint64(_MIX1)
        z = z ^ (z >> np.uint64(27))
        z = z * np.uint64(_MIX2)
        z = z ^ (z >> np.uint64(31))
        # top 53 bits convert to float64 exactly, so no astype round trip
        self._buf = ((z >> np.uint64(11)) * _TO_UNIT).tolist()
        self._pos = 0
        self._steps += self.CHUNK

    def take(self) -> float:
        """Next uniform_real value."""
        if self._pos >= len(self._buf):
            self._refill()
        v = self._buf[self._pos]
        self._pos += 1
        return v

    def take_int(self, k: int) -> int:
        if k <= 0:
            raise ZeroRangeError(f"uniform_int range must be positive, got {k}")
        return int(self.take() * k)
