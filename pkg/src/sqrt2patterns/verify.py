"""Exhaustive checks over all words of small length.

Words are visited by increasing length and then lexicographically, so the
first recorded violation of a suite is a minimal counterexample.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .transforms import (
    PHI,
    ClassificationError,
    excluded_subword_scan,
    is_fixed_point,
    match_shapes,
    reduce_str,
)
from .words import all_words, count_patterns, count_zeros

MAX_REPORTED = 20


@dataclass
class VerifySuiteResult:
    suite: str
    cases: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    violation_count: int = 0
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def fail(self, word: str, message: str) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_REPORTED:
            self.violations.append((word, message))

    def summary(self) -> str:
        status = "ok" if self.ok else f"{self.violation_count} violation(s)"
        return f"{self.suite}: {self.cases} cases, {status}, {self.wall_time:.2f}s"


def _pattern_table(n: int) -> dict[str, int]:
    return {s: count_patterns(s) for s in all_words(n)}


def check_phi(max_len: int) -> VerifySuiteResult:
    """Each map keeps length and zero count, is weakly increasing, keeps |P|
    (maps 1, 2) or does not increase it (maps 3-7)."""
    res = VerifySuiteResult("phi")
    for n in range(max_len + 1):
        table = _pattern_table(n)
        for s, pu in table.items():
            z = s.count("0")
            for k, f in PHI.items():
                res.cases += 1
                t = f(s)
                if len(t) != n or t.count("0") != z:
                    res.fail(s, f"phi{k} changed length or zero count: {t}")
                elif t < s:
                    res.fail(s, f"phi{k} decreased the word: {t}")
                elif k <= 2 and table[t] != pu:
                    res.fail(s, f"phi{k} changed |P| {pu} -> {table[t]}")
                elif table[t] > pu:
                    res.fail(s, f"phi{k} increased |P| {pu} -> {table[t]}")
    return res


def fixed_points(n: int) -> Iterator[str]:
    return (s for s in all_words(n) if is_fixed_point(s))


def check_table1(max_len: int) -> VerifySuiteResult:
    """Fixed points avoid every excluded subword, and a word containing an
    excluded subword of type k <= 7 is moved by map k."""
    res = VerifySuiteResult("table1")
    for n in range(max_len + 1):
        for s in all_words(n):
            res.cases += 1
            found = excluded_subword_scan(s)
            fixed = all(f(s) == s for f in PHI.values())
            if fixed and found:
                res.fail(s, f"fixed point contains excluded subwords {found}")
            for t in {t for t, _ in found if t <= 7}:
                if PHI[t](s) == s:
                    res.fail(s, f"contains a type-{t} subword but phi{t} fixes it")
    return res


def check_table2(max_len: int) -> VerifySuiteResult:
    """Every fixed point fits exactly one shape, rebuilds from its parameters,
    and the closed forms for N, |Z|, |P| agree with direct counts."""
    res = VerifySuiteResult("table2")
    for n in range(max_len + 1):
        for s in fixed_points(n):
            res.cases += 1
            hits = match_shapes(s)
            if len(hits) != 1:
                res.fail(s, f"matched {len(hits)} shapes")
                continue
            c = hits[0]
            z, p = count_zeros(s), count_patterns(s)
            if str(c.word()) != s:
                res.fail(s, f"{c} rebuilds to {c.word()}")
            elif (c.length(), c.zeros(), c.patterns()) != (n, z, p):
                res.fail(s, f"{c} closed forms {(c.length(), c.zeros(), c.patterns())} != {(n, z, p)}")
            elif c.balance_offset() is not None and 5 * z != 3 * p + 2 * n + c.balance_offset() - 2 * c.p:
                res.fail(s, f"{c} violates its zero/pattern balance")
            elif c.type_tag == 1 and c.q and z != p + 1:
                res.fail(s, f"{c} violates |Z| = |P| + 1")
    return res


def check_reduce(max_len: int) -> VerifySuiteResult:
    """Reduction ends at a fixed point with |Z| kept and |P| not increased;
    the finite bound 3|P| >= 5|Z| - 2N - 4 holds for every word."""
    res = VerifySuiteResult("reduce")
    for n in range(max_len + 1):
        for s in all_words(n):
            res.cases += 1
            t = reduce_str(s)
            z, p = s.count("0"), count_patterns(s)
            if not is_fixed_point(t):
                res.fail(s, f"reduced to non-fixed {t}")
            elif t.count("0") != z or count_patterns(t) > p:
                res.fail(s, f"reduced to {t}: |Z| or |P| contract broken")
            if 3 * p < 5 * z - 2 * n - 4:
                res.fail(s, "finite bound 3|P| >= 5|Z| - 2N - 4 fails")
    return res


def check_census(max_len: int) -> VerifySuiteResult:
    """For each (N, z), the least |P| over all of W_N equals the least |P| over
    the fixed points with z zeroes."""
    res = VerifySuiteResult("census")
    for n in range(max_len + 1):
        best_all: dict[int, int] = {}
        best_fixed: dict[int, int] = {}
        for s in all_words(n):
            z, p = s.count("0"), count_patterns(s)
            best_all[z] = min(p, best_all.get(z, p))
            if is_fixed_point(s):
                best_fixed[z] = min(p, best_fixed.get(z, p))
        for z in sorted(best_all):
            res.cases += 1
            if best_fixed.get(z) != best_all[z]:
                res.fail(f"N={n},z={z}", f"min over W_N {best_all[z]} != min over fixed points {best_fixed.get(z)}")
    return res


SUITES: dict[str, Callable[[int], VerifySuiteResult]] = {
    "phi": check_phi,
    "table1": check_table1,
    "table2": check_table2,
    "reduce": check_reduce,
    "census": check_census,
}


def run_suite(name: str, max_len: int) -> VerifySuiteResult:
    start = time.perf_counter()
    try:
        res = SUITES[name](max_len)
    except ClassificationError as exc:  # pragma: no cover - would falsify the shape list
        res = VerifySuiteResult(name)
        res.fail("", str(exc))
    res.wall_time = time.perf_counter() - start
    return res
