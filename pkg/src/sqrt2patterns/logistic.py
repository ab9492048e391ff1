"""Integer-valued logistic map ``L_n(x) = floor(x (2^n - x) / 2^(n-2))``.

An accuracy parameter ``n`` is *undesirable* when some ``x`` in
``X_n = {1, ..., 2^n - 1}`` maps to ``2^(n-1)``: a generator seeded there
reaches ``2^(n-1) -> 2^n -> 0`` and stays at zero.

Three detectors are provided, from strongest to weakest:

* :func:`is_undesirable_exact` -- a single integer square root decides it;
* :func:`sufficient_by_lemma2` -- compares a tail of the sqrt(2) expansion
  against ``(0.01 b_1 b_2 ...)_2``;
* :func:`sufficient_by_patterns` -- looks for 00, 0100 or 01010 at
  ``b_(n-1)``.

:func:`is_undesirable_brute` scans all of ``X_n`` and serves as the oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DomainError, ResourceLimitError
from .sqrt2 import sqrt2_fraction_bits

#: Largest ``n`` the brute-force scan accepts by default (int64 products stay exact).
BRUTE_MAX_N = 30
#: Default number of bits compared by :func:`sufficient_by_lemma2`.
LEMMA2_PRECISION = 4096

_BRUTE_CHUNK = 1 << 20


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError(f"accuracy parameter must be >= 2, got {n}")


def logistic_map(n: int, x: int) -> int:
    _check_n(n)
    if not 1 <= x < (1 << n):
        raise DomainError(f"x={x} not in X_{n} = 1..{(1 << n) - 1}")
    return (x * ((1 << n) - x)) >> (n - 2)


@dataclass(frozen=True)
class StateTrace:
    n: int
    states: tuple[int, ...]
    collapsed_at: Optional[int]


def iterate_states(n: int, s0: int, steps: int) -> StateTrace:
    """Run the generator's state update ``steps`` times from ``s0``.

    The update formula is applied on the closed range ``0..2^n``, which makes
    the collapse ``2^(n-1) -> 2^n -> 0 -> 0 ...`` fall out of it directly.
    """
    _check_n(n)
    if not 1 <= s0 < (1 << n):
        raise DomainError(f"seed {s0} not in X_{n}")
    if steps < 0:
        raise DomainError(f"negative step count {steps}")
    full = 1 << n
    half = 1 << (n - 1)
    states = [s0]
    s = s0
    for _ in range(steps):
        if s == 0:
            states.append(0)
            continue
        s = (s * (full - s)) >> (n - 2)
        states.append(s)
    collapsed = next((i for i, v in enumerate(states) if v == half), None)
    return StateTrace(n=n, states=tuple(states), collapsed_at=collapsed)


def is_undesirable_brute(n: int, max_n: int = BRUTE_MAX_N) -> tuple[bool, Optional[int]]:
    """Scan every ``x`` in ``X_n``; return the least witness if one exists."""
    _check_n(n)
    if n > max_n:
        raise ResourceLimitError(f"brute-force scan capped at n={max_n}, got {n}")
    full = 1 << n
    half = 1 << (n - 1)
    shift = n - 2
    if n > 31:
        # int64 would overflow; fall back to Python integers
        for x in range(1, full):
            if (x * (full - x)) >> shift == half:
                return True, x
        return False, None
    for lo in range(1, full, _BRUTE_CHUNK):
        x = np.arange(lo, min(lo + _BRUTE_CHUNK, full), dtype=np.int64)
        hit = np.flatnonzero(((x * (full - x)) >> shift) == half)
        if hit.size:
            return True, int(x[hit[0]])
    return False, None


def is_undesirable_exact(n: int) -> tuple[bool, Optional[int]]:
    """Decide undesirability with one integer square root.

    ``L_n(x) = 2^(n-1)`` is equivalent to
    ``2^(2n-3) - 2^(n-2) < m^2 <= 2^(2n-3)`` with ``m = |2^(n-1) - x|``.
    Every qualifying ``m`` is at most ``isqrt(2^(2n-3))``, and if that one
    misses the lower bound so does every smaller one.
    """
    _check_n(n)
    top = 1 << (2 * n - 3)
    m = math.isqrt(top)
    if m * m > top - (1 << (n - 2)):
        return True, (1 << (n - 1)) - m
    return False, None


@lru_cache(maxsize=8)
def _sqrt2_bits(k: int) -> str:
    return sqrt2_fraction_bits(k).bits


def _bits_at_least(k: int) -> str:
    # round up to a power of two so nearby requests share one cache entry
    return _sqrt2_bits(1 << max(10, (k - 1).bit_length()))


def sufficient_by_lemma2(n: int, max_precision: int = LEMMA2_PRECISION) -> Optional[bool]:
    """Compare ``(0.b_(n-1) b_n ...)_2`` with ``(0.01 b_1 b_2 ...)_2``.

    Returns True when the tail is strictly smaller at the first differing bit
    (the sufficient condition holds), False when it is strictly larger, and
    None when the first ``max_precision`` bits agree.
    """
    _check_n(n)
    bits = _bits_at_least(n - 2 + max_precision)
    tail = bits[n - 2 : n - 2 + max_precision]
    ref = ("01" + bits[: max_precision])[:max_precision]
    if tail == ref:
        return None
    return tail < ref


def sufficient_by_patterns(n: int) -> bool:
    """True iff ``b_(n-1)`` starts 00, 0100 or 01010, i.e. ``n`` is in ``P(b)``."""
    _check_n(n)
    bits = _bits_at_least(n + 3)
    j = n - 2
    return bits.startswith("00", j) or bits.startswith("0100", j) or bits.startswith("01010", j)


@dataclass(frozen=True)
class UndesirabilityReport:
    n: int
    exact: bool
    brute: Optional[bool]
    lemma2: Optional[bool]
    patterns: bool
    witness_x: Optional[int]

    def consistent(self) -> bool:
        """patterns => lemma2 => exact, brute == exact, witness valid."""
        if self.patterns and self.lemma2 is not True:
            return False
        if self.lemma2 is True and not self.exact:
            return False
        if self.brute is not None and self.brute != self.exact:
            return False
        if self.exact:
            return self.witness_x is not None and logistic_map(self.n, self.witness_x) == 1 << (self.n - 1)
        return self.witness_x is None


def undesirability_report(n: int, brute: bool = False,
                          max_precision: int = LEMMA2_PRECISION) -> UndesirabilityReport:
    exact, witness = is_undesirable_exact(n)
    return UndesirabilityReport(
        n=n,
        exact=exact,
        brute=is_undesirable_brute(n)[0] if brute else None,
        lemma2=sufficient_by_lemma2(n, max_precision),
        patterns=sufficient_by_patterns(n),
        witness_x=witness,
    )


METHODS = ("exact", "brute", "patterns", "lemma2")


def count_undesirable(N: int, method: str = "exact") -> tuple[int, Fraction]:
    """``d_N = #{2 <= n <= N : method says undesirable}`` and ``d_N / N``."""
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    if method == "exact":
        test = lambda n: is_undesirable_exact(n)[0]
    elif method == "brute":
        if N > BRUTE_MAX_N:
            raise ResourceLimitError(f"brute-force count capped at N={BRUTE_MAX_N}")
        test = lambda n: is_undesirable_brute(n)[0]
    elif method == "patterns":
        test = sufficient_by_patterns
    elif method == "lemma2":
        test = lambda n: sufficient_by_lemma2(n) is True
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")
    d = sum(1 for n in range(2, N + 1) if test(n))
    return d, Fraction(d, N)
