"""Running counts and rates suitable for plotting with external tools."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .constructions import construction_word
from .errors import DomainError
from .logistic import (
    METHODS,
    is_undesirable_brute,
    is_undesirable_exact,
    sufficient_by_lemma2,
    sufficient_by_patterns,
)
from .sqrt2 import sqrt2_fraction_bits
from .words import prefix_series

SOURCES = ("sqrt2-patterns", "undesirable-exact", "construction")


def decimal_str(x: Fraction, places: int = 12) -> str:
    """Render an exact rational with ``places`` decimals (round half to even)."""
    scaled = round(Fraction(x) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class AuditRow:
    """One parameter ``n`` with the verdict of every method that ran.

    ``d_n`` counts parameters ``2..n`` flagged by the primary (first) method.
    """

    n: int
    exact: Optional[bool]
    brute: Optional[bool]
    lemma2: Optional[bool]
    lemma2_ran: bool
    patterns: Optional[bool]
    witness_x: Optional[int]
    d_n: int

    @property
    def rate(self) -> Fraction:
        return Fraction(self.d_n, self.n)

    def csv(self) -> str:
        def cell(v):
            if v is None:
                return ""
            return str(v).lower() if isinstance(v, bool) else str(v)

        lemma2 = ("unknown" if self.lemma2 is None else cell(self.lemma2)) if self.lemma2_ran else ""
        return ",".join([
            str(self.n), cell(self.exact), cell(self.brute), lemma2, cell(self.patterns),
            cell(self.witness_x), str(self.d_n), str(self.rate), decimal_str(self.rate),
        ])


AUDIT_HEADER = "n,exact,brute,lemma2,patterns,witness_x,d_n,rate,rate_decimal"


def audit(max_n: int, methods: Sequence[str] = ("exact",)) -> list[AuditRow]:
    if max_n < 2:
        raise DomainError(f"--max must be >= 2, got {max_n}")
    methods = list(methods)
    if not methods or any(m not in METHODS for m in methods):
        raise DomainError(f"methods must be drawn from {METHODS}, got {methods}")
    rows = []
    d = 0
    for n in range(2, max_n + 1):
        exact = witness = brute = lemma2 = patterns = None
        if "exact" in methods:
            exact, witness = is_undesirable_exact(n)
        if "brute" in methods:
            brute = is_undesirable_brute(n)[0]
        if "lemma2" in methods:
            lemma2 = sufficient_by_lemma2(n)
        if "patterns" in methods:
            patterns = sufficient_by_patterns(n)
        primary = {"exact": exact, "brute": brute, "lemma2": lemma2, "patterns": patterns}[methods[0]]
        d += primary is True
        rows.append(AuditRow(n, exact, brute, lemma2, "lemma2" in methods, patterns, witness, d))
    return rows


def emit_rate_series(max_n: int, stride: int, source: str,
                     bound: str = "lower", rate="1/2") -> list[tuple[int, int, Fraction]]:
    """Rows ``(n, count, count/n)`` for ``n = stride, 2*stride, ... <= max_n``.

    ``count`` is ``|P(b^(n))|`` for ``sqrt2-patterns``, ``d_n`` for
    ``undesirable-exact``, and ``|P(w^(n))|`` of the chosen construction for
    ``construction``.
    """
    if stride < 1:
        raise DomainError(f"stride must be >= 1, got {stride}")
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    points = list(range(stride, max_n + 1, stride))
    if source == "undesirable-exact":
        out = []
        d = 0
        marks = set(points)
        for n in range(1, max_n + 1):
            if n >= 2 and is_undesirable_exact(n)[0]:
                d += 1
            if n in marks:
                out.append((n, d, Fraction(d, n)))
        return out
    if source == "sqrt2-patterns":
        w = sqrt2_fraction_bits(max_n).bits
    elif source == "construction":
        w = construction_word(bound, rate, max_n)
    else:
        raise DomainError(f"source must be one of {SOURCES}, got {source!r}")
    return [(e.n, e.p_count, e.p_rate) for e in prefix_series(w, points)]
