"""Infinite words whose zero rate is ``r`` and whose pattern rate sits exactly
on one of the two bounds ``(5r - 2)/3 <= R <= r``.

Rates are restricted to rationals so every parameter is computed exactly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DomainError
from .words import BinaryWord

RateLike = Union[Fraction, int, str, tuple]

TWO_FIFTHS = Fraction(2, 5)


def as_rate(r: RateLike) -> Fraction:
    """Parse ``r`` as an exact rational in [0, 1].

    Accepts ``Fraction``, ``int``, ``"num/den"`` strings and ``(num, den)``
    pairs.  Floats are refused: they carry no exact intent.
    """
    if isinstance(r, float):
        raise DomainError("rates must be exact; pass a Fraction or 'num/den' instead of a float")
    if isinstance(r, tuple):
        r = Fraction(*r)
    try:
        r = Fraction(r)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot read {r!r} as a rational rate") from exc
    if not 0 <= r <= 1:
        raise DomainError(f"rate {r} outside [0, 1]")
    return r


def dyadic_digits(a: Fraction) -> Iterator[int]:
    """Binary digits ``a_1 a_2 ...`` of ``a`` in [0, 1) by exact long division.

    A dyadic rational comes out as its terminating expansion followed by zeroes.
    """
    if not 0 <= a < 1:
        raise DomainError(f"{a} outside [0, 1)")
    num, den = a.numerator, a.denominator
    while True:
        num *= 2
        if num >= den:
            num -= den
            yield 1
        else:
            yield 0


@dataclass(frozen=True)
class LowerBoundParams:
    """``p = ceil((5r-2)/(1-r))`` and ``alpha = p - (5r-2)/(1-r)``, for 2/5 < r < 1."""

    r: Fraction
    p: int
    alpha: Fraction

    @classmethod
    def from_rate(cls, r: RateLike) -> "LowerBoundParams":
        r = as_rate(r)
        if not TWO_FIFTHS < r < 1:
            raise DomainError(f"block parameters need 2/5 < r < 1, got {r}")
        x = (5 * r - 2) / (1 - r)
        p = math.ceil(x)
        return cls(r=r, p=p, alpha=p - x)

    def alpha_bits(self) -> Iterator[int]:
        return dyadic_digits(self.alpha)

    def alpha_prefix(self, i: int) -> list[int]:
        """``[alpha_1, ..., alpha_i]``."""
        return list(itertools.islice(self.alpha_bits(), i))


def lower_blocks(params: LowerBoundParams) -> Iterator[str]:
    """Yield ``w<1>, w<2>, ...`` where ``w<i> = w<i-1> w<i-1> 01011 0^(p - alpha_i)``."""
    w = ""
    for a in params.alpha_bits():
        w = w + w + "01011" + "0" * (params.p - a)
        yield w


def lower_bound_bits(r: RateLike) -> Iterator[int]:
    """Symbols of the lower-bound word for rate ``r`` (2/5 <= r <= 1), forever."""
    r = as_rate(r)
    if r < TWO_FIFTHS:
        raise DomainError(f"lower-bound construction needs r >= 2/5, got {r}")
    if r == 1:
        return itertools.repeat(0)
    if r == TWO_FIFTHS:
        return itertools.cycle((0, 1, 0, 1, 1))
    return _lower_stream(LowerBoundParams.from_rate(r))


def _lower_stream(params: LowerBoundParams) -> Iterator[int]:
    done = 0
    for w in lower_blocks(params):
        for ch in w[done:]:
            yield 1 if ch == "1" else 0
        done = len(w)


def lower_bound_word(r: RateLike, length: int) -> BinaryWord:
    """Length-``length`` prefix of the lower-bound word.

    The recursion is deepened only until the block covers ``length`` symbols.
    """
    r = as_rate(r)
    if r < TWO_FIFTHS:
        raise DomainError(f"lower-bound construction needs r >= 2/5, got {r}")
    if length < 0:
        raise DomainError(f"negative length {length}")
    if r == 1:
        return BinaryWord("0" * length)
    if r == TWO_FIFTHS:
        return BinaryWord(("01011" * (length // 5 + 1))[:length])
    w = ""
    for w in lower_blocks(LowerBoundParams.from_rate(r)):
        if len(w) >= length:
            break
    return BinaryWord(w[:length])


@dataclass(frozen=True)
class BlockStats:
    length: int
    zeros: int
    patterns: int


def lemma14_stats(i: int, params: LowerBoundParams) -> BlockStats:
    """Closed-form length, zero count and pattern count of ``w<i>``."""
    if i < 1:
        raise DomainError(f"block index must be >= 1, got {i}")
    a = params.alpha_prefix(i)
    tail = sum(a[j - 1] << (i - j) for j in range(1, i + 1))
    scale = (1 << i) - 1
    p = params.p
    return BlockStats(
        length=scale * (p + 5) - tail,
        zeros=scale * (p + 2) - tail,
        patterns=scale * p - 1 - tail + (a[i - 1] if p == 1 else 0),
    )


def block_balance(i: int, params: LowerBoundParams) -> tuple[int, int]:
    """Both sides of ``5 zeta_i - 2 l_i = 3 pi_i + 3 - 3 [p = 1] alpha_i``."""
    st = lemma14_stats(i, params)
    a_i = params.alpha_prefix(i)[-1]
    lhs = 5 * st.zeros - 2 * st.length
    rhs = 3 * st.patterns + 3 - (3 * a_i if params.p == 1 else 0)
    return lhs, rhs


def upper_deltas(r: RateLike) -> Iterator[int]:
    """``delta_1, delta_2, ...``: ``delta_k = 1`` iff
    ``(sum_{i<k} 2 i delta_i + 2k) / (k(k+1)) <= r``."""
    r = as_rate(r)
    num, den = r.numerator, r.denominator
    acc = 0
    for k in itertools.count(1):
        d = 1 if (acc + 2 * k) * den <= num * k * (k + 1) else 0
        acc += 2 * k * d
        yield d


def upper_bound_bits(r: RateLike) -> Iterator[int]:
    """Symbols of the upper-bound word: block ``k`` is ``2k`` copies of ``1 - delta_k``."""
    for k, d in enumerate(upper_deltas(r), start=1):
        yield from itertools.repeat(1 - d, 2 * k)


def upper_bound_word(r: RateLike, length: int) -> BinaryWord:
    if length < 0:
        raise DomainError(f"negative length {length}")
    parts = []
    total = 0
    for k, d in enumerate(upper_deltas(r), start=1):
        if total >= length:
            break
        parts.append(("0" if d else "1") * (2 * k))
        total += 2 * k
    return BinaryWord("".join(parts)[:length])


def running_partial_sums(r: RateLike, k: int) -> Fraction:
    """``sum_{i<=k} 2 i delta_i / (k(k+1))``, which never exceeds ``r``."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    acc = sum(2 * i * d for i, d in zip(range(1, k + 1), upper_deltas(r)))
    return Fraction(acc, k * (k + 1))


def partial_sum_series(r: RateLike, k_max: int) -> Iterator[Fraction]:
    """:func:`running_partial_sums` for ``k = 1..k_max`` in one pass."""
    acc = 0
    for k, d in zip(range(1, k_max + 1), upper_deltas(r)):
        acc += 2 * k * d
        yield Fraction(acc, k * (k + 1))


def construction_word(bound: str, r: RateLike, length: int) -> BinaryWord:
    if bound == "lower":
        return lower_bound_word(r, length)
    if bound == "upper":
        return upper_bound_word(r, length)
    raise DomainError(f"bound must be 'lower' or 'upper', got {bound!r}")


def target_rates(bound: str, r: RateLike) -> tuple[Fraction, Fraction]:
    """Limit zero rate and limit pattern rate of the chosen construction."""
    r = as_rate(r)
    return (r, (5 * r - 2) / 3) if bound == "lower" else (r, r)
