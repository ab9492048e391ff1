"""Exact integer square roots and the binary expansion of sqrt(2).

No floating point is used anywhere: every comparison against sqrt(2) is
carried out by squaring integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, ResourceLimitError

#: Default cap on the number of fractional bits produced in one call.
MAX_PRECISION = 1 << 26


def isqrt(v: int) -> int:
    """Return the unique ``s`` with ``s*s <= v < (s+1)*(s+1)``."""
    if v < 0:
        raise DomainError(f"isqrt of negative integer {v}")
    return math.isqrt(v)


@dataclass(frozen=True)
class DyadicBits:
    """Prefix ``b_1 ... b_k`` of the fractional part of sqrt(2).

    ``bits`` is an ASCII string of '0'/'1'; ``bit(i)`` is 1-indexed.
    """

    bits: str

    @property
    def precision(self) -> int:
        return len(self.bits)

    def bit(self, i: int) -> int:
        if not 1 <= i <= len(self.bits):
            raise IndexError(f"bit index {i} outside 1..{len(self.bits)}")
        return 1 if self.bits[i - 1] == "1" else 0

    def value(self) -> int:
        """``V = 2^k + sum b_i 2^(k-i)``, i.e. ``(1.b_1...b_k)_2 * 2^k``."""
        return int("1" + self.bits, 2)

    def brackets_sqrt2(self) -> bool:
        """Check ``V^2 <= 2 * 4^k < (V+1)^2`` exactly."""
        k = len(self.bits)
        v = self.value()
        target = 2 << (2 * k)
        return v * v <= target < (v + 1) * (v + 1)

    def __str__(self) -> str:
        return self.bits


def sqrt2_fraction_bits(k: int, max_precision: int = MAX_PRECISION) -> DyadicBits:
    """First ``k`` fractional bits of sqrt(2).

    These are the low ``k`` bits of ``isqrt(2^(2k+1))``, whose leading bit
    is the integer part 1.
    """
    if k < 1:
        raise DomainError(f"need at least one bit, got k={k}")
    if k > max_precision:
        raise ResourceLimitError(f"k={k} exceeds max_precision={max_precision}")
    root = math.isqrt(1 << (2 * k + 1))
    return DyadicBits(format(root, "b")[1:])


def sqrt2_bit_stream(chunk: int = 1024, max_precision: int = MAX_PRECISION) -> Iterator[int]:
    """Yield ``b_1, b_2, ...`` indefinitely (up to ``max_precision``).

    Precision doubles whenever the buffered bits run out; earlier bits never
    change, so the stream is a consistent infinite word.
    """
    produced = 0
    k = max(1, chunk)
    while True:
        bits = sqrt2_fraction_bits(min(k, max_precision), max_precision).bits
        for ch in bits[produced:]:
            yield 1 if ch == "1" else 0
        produced = len(bits)
        if produced >= max_precision:
            return
        k *= 2
