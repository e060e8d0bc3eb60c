"""SplitMix64, a tiny splittable PRNG with fixed constants.

The stream is fully specified here so other implementations can reproduce
generated instances bit for bit:

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

``below(n)`` rejects draws at or above ``2**64 - (2**64 mod n)`` and
returns the draw mod ``n``. ``random()`` is ``(next() >> 11) * 2**-53``.
``split()`` seeds a child generator with the parent's next output.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next()
            if x < limit:
                return x % n

    def random(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def split(self) -> SplitMix64:
        return SplitMix64(self.next())
