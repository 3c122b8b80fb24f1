"""Counter-based deterministic random streams for share encoding.

Every pixel gets its own stream keyed by (seed, pixel_index), so encoding is
order-independent and reproducible bit-for-bit across runs, platforms and
kernel backends.  The construction is built from the SplitMix64 finalizer
(Steele, Lea & Flood 2014; public-domain constants):

    mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9 (mod 2^64)
              z ^= z >> 27; z *= 0x94D049BB133111EB (mod 2^64)
              z ^= z >> 31

    stream state   s_0 = mix64(mix64(seed) XOR (index * GAMMA mod 2^64))
    t-th raw draw  u_t = mix64(s_0 + t * GAMMA mod 2^64),  t = 1, 2, ...

with GAMMA = 0x9E3779B97F4A7C15 (the golden-ratio increment).  Bounded draws
use modulo rejection: for bound b, reject raw values below (2^64 - b) mod b
and return u % b, which is exactly uniform.  A bound of 1 consumes no draw.

The compiled kernel reimplements the same arithmetic on C uint64; this
module is the reference and the pure-Python fallback.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_MULT1 = 0xBF58476D1CE4E5B9
_MULT2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 output function: avalanching 64-bit mix."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MULT1) & MASK64
    z = ((z ^ (z >> 27)) * _MULT2) & MASK64
    return z ^ (z >> 31)


class PixelStream:
    """Deterministic draw stream for one (seed, index) pair."""

    __slots__ = ("state",)

    def __init__(self, seed: int, index: int):
        self.state = mix64(mix64(seed) ^ ((index * GAMMA) & MASK64))

    def next_raw(self) -> int:
        """Next raw 64-bit value."""
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound); bound must be >= 1."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        cutoff = ((1 << 64) - bound) % bound
        while True:
            u = self.next_raw()
            if u >= cutoff:
                return u % bound

    def sample_subset_mask(self, n: int, j: int) -> int:
        """Bit mask of a uniform j-subset of {0..n-1} (partial Fisher-Yates)."""
        idx = list(range(n))
        mask = 0
        for t in range(j):
            r = t + self.next_below(n - t)
            idx[t], idx[r] = idx[r], idx[t]
            mask |= 1 << idx[t]
        return mask
