"""Finite binary words, zero positions Z(w), pattern positions P(w), and rates.

Positions are 1-indexed throughout.  An index ``i`` belongs to ``P(w)`` when
``i >= 2`` and one of the patterns 00, 0100, 01010 starts at ``i - 1`` and
fits entirely inside ``w``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .errors import DomainError

# (pattern, offset of the last symbol relative to i)
PATTERNS = (("00", 0), ("0100", 2), ("01010", 3))


class BinaryWord:
    """Immutable word over {0, 1}, stored as an ASCII '0'/'1' string.

    Indexing through :meth:`at` and :meth:`subword` is 1-based; ``len`` is
    the word length.  Comparison is lexicographic, which on words of equal
    length is the order used by the transformations.
    """

    __slots__ = ("_s",)

    def __init__(self, symbols: Union[str, Iterable[int], "BinaryWord"] = ""):
        if isinstance(symbols, BinaryWord):
            s = symbols._s
        elif isinstance(symbols, str):
            s = symbols
        else:
            s = "".join("1" if int(c) else "0" for c in symbols)
        if s.strip("01"):
            raise DomainError(f"not a binary word: {s[:40]!r}")
        self._s = s

    @classmethod
    def from_int(cls, value: int, length: int) -> "BinaryWord":
        """Word whose symbols are the ``length``-bit binary form of ``value``."""
        return cls(format(value, f"0{length}b") if length else "")

    @property
    def bits(self) -> str:
        return self._s

    def at(self, i: int) -> int:
        if not 1 <= i <= len(self._s):
            raise IndexError(f"index {i} outside 1..{len(self._s)}")
        return 1 if self._s[i - 1] == "1" else 0

    def prefix(self, k: int) -> "BinaryWord":
        if not 0 <= k <= len(self._s):
            raise DomainError(f"prefix length {k} outside 0..{len(self._s)}")
        return BinaryWord(self._s[:k])

    def subword(self, i: int, j: int) -> "BinaryWord":
        """``w_[i,j] = w_i ... w_j`` for ``1 <= i <= j <= len(w)``."""
        if not 1 <= i <= j <= len(self._s):
            raise IndexError(f"subword [{i},{j}] outside word of length {len(self._s)}")
        return BinaryWord(self._s[i - 1 : j])

    def contains(self, other: Union[str, "BinaryWord"]) -> bool:
        return str(other) in self._s

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self._s.encode("ascii"), dtype=np.uint8) - ord("0")

    def __len__(self) -> int:
        return len(self._s)

    def __iter__(self):
        return (1 if c == "1" else 0 for c in self._s)

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        return f"BinaryWord({self._s!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, BinaryWord):
            return self._s == other._s
        if isinstance(other, str):
            return self._s == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._s)

    def __lt__(self, other: "BinaryWord") -> bool:
        return self._s < str(other)

    def __le__(self, other: "BinaryWord") -> bool:
        return self._s <= str(other)

    def __add__(self, other: Union[str, "BinaryWord"]) -> "BinaryWord":
        return BinaryWord(self._s + str(other))

    def __mul__(self, j: int) -> "BinaryWord":
        return BinaryWord(self._s * j)


WordLike = Union[str, BinaryWord]


def as_word(w: Union[WordLike, Iterable[int]]) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else BinaryWord(w)


def all_words(n: int) -> Iterable[str]:
    """All ``2^n`` words of length ``n`` in increasing lexicographic order."""
    if n == 0:
        yield ""
        return
    fmt = f"0{n}b"
    for v in range(1 << n):
        yield format(v, fmt)


def zero_indices(w: WordLike) -> frozenset[int]:
    s = str(w)
    return frozenset(i + 1 for i, c in enumerate(s) if c == "0")


def pattern_indices(w: WordLike) -> frozenset[int]:
    """The index set ``P(w)``.

    Single left-to-right pass; an index matching several patterns is kept once.
    """
    s = str(w)
    n = len(s)
    out = set()
    for j in range(n - 1):
        if s[j] != "0":
            continue
        # j is the 0-based position of w_{i-1}, so i = j + 2
        if s[j + 1] == "0" or s.startswith("0100", j) or s.startswith("01010", j):
            out.add(j + 2)
    return frozenset(out)


def count_zeros(w: WordLike) -> int:
    return str(w).count("0")


def count_patterns(w: WordLike) -> int:
    """``|P(w)|`` without building the index set."""
    s = str(w)
    if len(s) > 4096:
        return int(np.count_nonzero(pattern_end_positions(s) <= len(s)))
    return len(pattern_indices(s))


def pattern_end_positions(w: Union[WordLike, np.ndarray]) -> np.ndarray:
    """For each index ``i`` (array slot ``i - 1``), the smallest prefix length
    ``n`` for which ``i`` lies in ``P(w^(n))``; a sentinel larger than
    ``len(w)`` marks indices never in ``P``.

    Because the length guards only ever require the pattern to fit, ``i`` is
    in ``P(w^(n))`` exactly when ``n`` is at least this value.
    """
    a = w if isinstance(w, np.ndarray) else as_word(w).as_array()
    a = a.astype(bool)
    n = a.size
    never = n + 1
    ends = np.full(n, never, dtype=np.int64)
    if n < 2:
        return ends
    # z[j] is True where w_{j+1} == 0 (0-based j)
    z = ~a
    idx = np.arange(n, dtype=np.int64) + 1  # 1-based index i
    for pattern, tail in reversed(PATTERNS):
        m = len(pattern)
        ok = np.zeros(n, dtype=bool)
        # pattern starts at 0-based j = i - 2, for i = 2..n - tail
        span = n - m + 1
        if span <= 0:
            continue
        hit = np.ones(span, dtype=bool)
        for off, ch in enumerate(pattern):
            col = z[off : off + span] if ch == "0" else a[off : off + span]
            hit &= col
        ok[1 : 1 + span] = hit
        ends = np.where(ok, np.minimum(ends, idx + tail), ends)
    return ends


@dataclass(frozen=True)
class RateEstimate:
    """Zero and pattern counts on a prefix ``w^(n)``, with exact rates."""

    n: int
    z_count: int
    p_count: int

    @property
    def z_rate(self) -> Fraction:
        return Fraction(self.z_count, self.n) if self.n else Fraction(0)

    @property
    def p_rate(self) -> Fraction:
        return Fraction(self.p_count, self.n) if self.n else Fraction(0)


def take(source: Union[WordLike, Iterable[int]], n: int) -> BinaryWord:
    """Length-``n`` prefix of a finite word or of a symbol stream."""
    if n < 0:
        raise DomainError(f"negative prefix length {n}")
    if isinstance(source, (str, BinaryWord)):
        w = as_word(source)
        if n > len(w):
            raise DomainError(f"prefix length {n} exceeds word length {len(w)}")
        return w.prefix(n)
    bits = "".join("1" if b else "0" for b in itertools.islice(source, n))
    if len(bits) < n:
        raise DomainError(f"stream ended after {len(bits)} symbols, wanted {n}")
    return BinaryWord(bits)


def prefix_rates(source: Union[WordLike, Iterable[int]], n: int) -> RateEstimate:
    """Counts of zeroes and pattern indices on the prefix of length ``n``."""
    w = take(source, n)
    return RateEstimate(n=n, z_count=count_zeros(w), p_count=count_patterns(w))


def prefix_series(w: WordLike, lengths: Iterable[int]) -> list[RateEstimate]:
    """:class:`RateEstimate` for several prefix lengths of one word, in one pass."""
    w = as_word(w)
    a = w.as_array()
    ends = np.sort(pattern_end_positions(a))
    zeros = np.concatenate(([0], np.cumsum(a == 0)))
    out = []
    for n in lengths:
        if not 0 <= n <= len(w):
            raise DomainError(f"prefix length {n} outside 0..{len(w)}")
        p = int(np.searchsorted(ends, n, side="right"))
        out.append(RateEstimate(n=n, z_count=int(zeros[n]), p_count=p))
    return out
