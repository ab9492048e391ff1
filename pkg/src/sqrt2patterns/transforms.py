"""Seven bit-permuting maps on W_N, reduction to their common fixed points,
the excluded-subword scan for fixed points, and the classification of fixed
points into seven parameterised shapes.

Every map keeps the length and the number of zeroes, never decreases the
word lexicographically, and never increases ``|P|``.  Repeated application
therefore terminates in a word fixed by all seven maps, and the shapes of
such words are few enough to count ``|P|`` in closed form.

Each map is written as in its two-case definition: candidate decompositions
are visited left to right and the first one whose side conditions hold is
rewritten.  Side conditions are spelled out as guard predicates rather than
folded into the search.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Union

from .errors import DomainError
from .words import BinaryWord, WordLike, count_patterns, count_zeros


def _occurrences(s: str, pat: str, start: int = 0) -> Iterator[int]:
    j = s.find(pat, start)
    while j != -1:
        yield j
        j = s.find(pat, j + 1)


def _zero_run_start(s: str, j: int) -> int:
    """Start of the maximal run of zeroes that ends at 0-based position ``j``."""
    a = j
    while a > 0 and s[a - 1] == "0":
        a -= 1
    return a


def _last_not_zero(v: str) -> bool:
    return not v or v[-1] != "0"


def _phi1(s: str) -> str:
    # u = v 0 1^p, p >= 1  ->  1^p v 0
    if not s.endswith("1") or "0" not in s:
        return s
    head = s.rstrip("1")
    p = len(s) - len(head)
    return "1" * p + head


def _phi2(s: str) -> str:
    # u = 1^p v 111 v', 111 not in v, v nonempty, v starts and ends with 0
    p = len(s) - len(s.lstrip("1"))
    for j in _occurrences(s, "0111", p):
        v = s[p : j + 1]
        if v and v[0] == "0" and v[-1] == "0" and "111" not in v:
            return "1" * (p + 1) + v + "11" + s[j + 4 :]
    return s


def _phi3(s: str) -> str:
    # u = v 0^p 11 v', p >= 2, 0011 not in v, v does not end in 0
    for j in _occurrences(s, "0011"):
        a = _zero_run_start(s, j)
        v, p = s[:a], j + 2 - a
        if p >= 2 and "0011" not in v and _last_not_zero(v):
            return v + "011" + "0" * (p - 1) + s[j + 4 :]
    return s


def _phi4(s: str) -> str:
    # u = v 01010 v', 01010 not in v010
    for j in _occurrences(s, "01010"):
        v = s[:j]
        if "01010" not in v + "010":
            return v + "01100" + s[j + 5 :]
    return s


def _phi5(s: str) -> str:
    # u = v 0^p 100 v', p >= 1, 0100 not in v0^p, v does not end in 0
    for j in _occurrences(s, "0100"):
        a = _zero_run_start(s, j)
        v, p = s[:a], j + 1 - a
        if p >= 1 and "0100" not in s[: j + 1] and _last_not_zero(v):
            return v + "1" + "0" * (p + 2) + s[j + 4 :]
    return s


def _phi6(s: str) -> str:
    # u = v 0^p 10110 v', p >= 2, 0010110 not in v0^p, v does not end in 0
    for j in _occurrences(s, "0010110"):
        a = _zero_run_start(s, j + 1)
        v, p = s[:a], j + 2 - a
        if p >= 2 and "0010110" not in s[: j + 2] and _last_not_zero(v):
            return v + "01011" + "0" * p + s[j + 7 :]
    return s


def _phi7(s: str) -> str:
    # u = v 0110110 v', 0110110 not in v0110
    for j in _occurrences(s, "0110110"):
        v = s[:j]
        if "0110110" not in v + "0110":
            return v + "1010110" + s[j + 7 :]
    return s


PHI: dict[int, Callable[[str], str]] = {
    1: _phi1, 2: _phi2, 3: _phi3, 4: _phi4, 5: _phi5, 6: _phi6, 7: _phi7,
}


@dataclass(frozen=True)
class TransformStep:
    k: int
    before: BinaryWord
    after: BinaryWord

    @property
    def changed(self) -> bool:
        return self.before != self.after


def phi_str(k: int, s: str) -> str:
    """Apply map ``k`` to a raw '0'/'1' string (no validation; used by sweeps)."""
    return PHI[k](s)


def phi(k: int, u: WordLike) -> TransformStep:
    if k not in PHI:
        raise DomainError(f"map index must be 1..7, got {k}")
    w = u if isinstance(u, BinaryWord) else BinaryWord(u)
    return TransformStep(k, w, BinaryWord(PHI[k](w.bits)))


def is_fixed_point(u: WordLike) -> bool:
    s = str(u)
    return all(f(s) == s for f in PHI.values())


def reduce_to_normal_form(u: WordLike) -> tuple[BinaryWord, list[TransformStep]]:
    """Apply the lowest-numbered map that changes the word until none does.

    Each changing step strictly increases the word lexicographically, so the
    loop ends.  Other application orders may reach a different fixed point.
    """
    s = str(BinaryWord(u))
    trace = []
    while True:
        for k in range(1, 8):
            t = PHI[k](s)
            if t != s:
                trace.append(TransformStep(k, BinaryWord(s), BinaryWord(t)))
                s = t
                break
        else:
            return BinaryWord(s), trace


def reduce_str(s: str) -> str:
    """Same reduction as :func:`reduce_to_normal_form` on a raw string, no trace."""
    while True:
        for f in PHI.values():
            t = f(s)
            if t != s:
                s = t
                break
        else:
            return s


# Excluded subwords of fixed points.  Types 1, 2, 10 and 11 carry a free
# word v; each is reported through its shortest witness:
#   1  "0 v 1)"    -> the last zero, when the word ends in 1
#   2  "0 v 111"   -> each occurrence of 0111
#   10 "0010 v"    -> each 0010 that is not at the very end
#   11 "001 v"     -> each 001 whose remainder is not exactly "0"
_FIXED_SHAPES = {
    2: "0111", 3: "0011", 4: "01010", 5: "0100", 6: "0010110",
    7: "0110110", 8: "001011", 9: "00101",
}


def excluded_subword_scan(u: WordLike) -> list[tuple[int, int]]:
    """All ``(type, position)`` pairs of excluded subwords, positions 1-indexed,
    sorted by type then position."""
    s = str(u)
    found = []
    if s.endswith("1") and "0" in s:
        found.append((1, s.rindex("0") + 1))
    for t, pat in _FIXED_SHAPES.items():
        found.extend((t, j + 1) for j in _occurrences(s, pat))
    found.extend((10, j + 1) for j in _occurrences(s, "0010") if j + 4 < len(s))
    found.extend((11, j + 1) for j in _occurrences(s, "001") if s[j + 3 :] != "0")
    return sorted(found)


# Fixed-point shapes: 1^p, optional 011, (01011)^s, then a tail.
_SHAPES = [
    (1, re.compile(r"(1*)()(0*)")),
    (2, re.compile(r"(1*)((?:01011)*)(0{2,})10")),
    (3, re.compile(r"(1*)011((?:01011)*)(0{2,})10")),
    (4, re.compile(r"(1*)((?:01011)+)(0+)")),
    (5, re.compile(r"(1*)011((?:01011)*)(0+)")),
    (6, re.compile(r"(1*)((?:01011)*)010()")),
    (7, re.compile(r"(1*)011((?:01011)*)010()")),
]


class ClassificationError(Exception):
    """A fixed point matched no shape, or several."""


@dataclass(frozen=True)
class NormalFormClass:
    """A fixed-point shape together with its parameters.

    ``q`` is None for types 6 and 7, ``s`` is None for type 1.
    """

    type_tag: int
    p: int
    q: Optional[int]
    s: Optional[int]

    def word(self) -> BinaryWord:
        p, q, s = self.p, self.q or 0, self.s or 0
        lead = "011" if self.type_tag in (3, 5, 7) else ""
        blocks = "01011" * s
        if self.type_tag == 1:
            body = "0" * q
        elif self.type_tag in (2, 3):
            body = lead + blocks + "0" * q + "10"
        elif self.type_tag in (4, 5):
            body = lead + blocks + "0" * q
        else:
            body = lead + blocks + "010"
        return BinaryWord("1" * p + body)

    def length(self) -> int:
        p, q, s = self.p, self.q, self.s
        return {
            1: lambda: p + q,
            2: lambda: 5 * s + p + q + 2,
            3: lambda: 5 * s + p + q + 5,
            4: lambda: 5 * s + p + q,
            5: lambda: 5 * s + p + q + 3,
            6: lambda: 5 * s + p + 3,
            7: lambda: 5 * s + p + 6,
        }[self.type_tag]()

    def zeros(self) -> int:
        q, s = self.q, self.s
        return {
            1: lambda: q,
            2: lambda: 2 * s + q + 1,
            3: lambda: 2 * s + q + 2,
            4: lambda: 2 * s + q,
            5: lambda: 2 * s + q + 1,
            6: lambda: 2 * s + 2,
            7: lambda: 2 * s + 3,
        }[self.type_tag]()

    def patterns(self) -> int:
        if self.type_tag in (6, 7):
            return 0
        # q - 1 in every remaining row; a zero-free type-1 word has no pattern,
        # where q - 1 would read -1
        return max(self.q - 1, 0)

    def balance_offset(self) -> Optional[int]:
        """The constant ``c`` in ``5|Z| = 3|P| + 2N + c - 2p`` (types 2-7)."""
        return {2: 4, 3: 3, 4: 3, 5: 2, 6: 4, 7: 3}.get(self.type_tag)


def match_shapes(u: WordLike) -> list[NormalFormClass]:
    """Every shape the word fits, without requiring it to be a fixed point."""
    s = str(u)
    out = []
    for tag, rx in _SHAPES:
        m = rx.fullmatch(s)
        if not m:
            continue
        ones, blocks, zeros = m.groups()
        out.append(NormalFormClass(
            type_tag=tag,
            p=len(ones),
            q=None if tag in (6, 7) else len(zeros),
            s=None if tag == 1 else len(blocks) // 5,
        ))
    return out


def classify_normal_form(u: WordLike) -> NormalFormClass:
    if not is_fixed_point(u):
        raise DomainError(f"{str(u)!r} is not fixed by every map")
    hits = match_shapes(u)
    if len(hits) != 1:
        raise ClassificationError(f"{str(u)!r} matched {len(hits)} shapes: {hits}")
    return hits[0]


def finite_bound_holds(u: WordLike) -> bool:
    """``3|P(u)| >= 5|Z(u)| - 2N - 4``, the finite form of the lower bound."""
    s = str(u)
    return 3 * count_patterns(s) >= 5 * count_zeros(s) - 2 * len(s) - 4
