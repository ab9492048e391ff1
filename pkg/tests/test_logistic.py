from fractions import Fraction

import pytest

import oracles
from sqrt2patterns.errors import DomainError, ResourceLimitError
from sqrt2patterns.logistic import (
    count_undesirable,
    is_undesirable_brute,
    is_undesirable_exact,
    iterate_states,
    logistic_map,
    sufficient_by_lemma2,
    sufficient_by_patterns,
    undesirability_report,
)


@pytest.mark.parametrize("n, x, y", [(2, 2, 4), (2, 1, 3), (13, 1200, 4096)])
def test_map_examples(n, x, y):
    assert logistic_map(n, x) == y == oracles.logistic(n, x)


@pytest.mark.parametrize("n", range(2, 17))
def test_map_range(n):
    half = 2 ** (n - 1)
    for x in range(1, 2**n):
        y = logistic_map(n, x)
        if x == half:
            assert y == 2**n
        else:
            assert 1 <= y <= 2**n - 1


def test_map_domain():
    with pytest.raises(DomainError):
        logistic_map(3, 0)
    with pytest.raises(DomainError):
        logistic_map(3, 8)
    with pytest.raises(DomainError):
        logistic_map(1, 1)


@pytest.mark.parametrize("n, s0, steps, states, at", [
    (2, 2, 3, (2, 4, 0, 0), 0),
    (13, 1200, 3, (1200, 4096, 8192, 0), 1),
    (3, 1, 2, (1, 3, 7), None),
])
def test_iterate_examples(n, s0, steps, states, at):
    t = iterate_states(n, s0, steps)
    assert t.states == states
    assert t.collapsed_at == at


@pytest.mark.parametrize("n", range(2, 17))
def test_collapse_from_witness(n):
    found, x = is_undesirable_exact(n)
    if not found:
        return
    t = iterate_states(n, x, 4)
    assert t.states[1:] == (2 ** (n - 1), 2**n, 0, 0)
    assert t.collapsed_at == 1


def test_iterate_follows_map():
    t = iterate_states(10, 37, 50)
    for a, b in zip(t.states, t.states[1:]):
        if 1 <= a < 2**10 and a != 2**9:
            assert b == logistic_map(10, a)


@pytest.mark.parametrize("n, expected", [(2, (False, None)), (3, (False, None)), (13, (True, 1200))])
def test_brute_examples(n, expected):
    assert is_undesirable_brute(n) == expected


def test_exact_examples():
    assert is_undesirable_exact(13) == (True, 1200)
    assert is_undesirable_exact(2) == (False, None)
    assert is_undesirable_exact(5)[0] is True


@pytest.mark.parametrize("n", range(2, 15))
def test_exact_vs_python_scan(n):
    assert is_undesirable_exact(n) == oracles.undesirable_scan(n)


def test_brute_cap():
    with pytest.raises(ResourceLimitError):
        is_undesirable_brute(12, max_n=10)


def test_bitstream_examples():
    assert sufficient_by_lemma2(13) is True
    assert sufficient_by_lemma2(65) is True
    # b_1 b_2 b_3 = 011 > 010...: decided "greater" by the third bit
    assert sufficient_by_lemma2(2) is False


def test_bitstream_saturates_to_unknown():
    # comparing only one bit: b_(n-1) and the leading 0 agree whenever b_(n-1) = 0
    assert sufficient_by_lemma2(2, max_precision=1) is None
    assert sufficient_by_lemma2(2, max_precision=3) is False


def test_bitstream_matches_squared_condition():
    for n in range(2, 600):
        assert sufficient_by_lemma2(n) is oracles.lemma2_exact(n), n


def test_bitstream_coincides_with_exact():
    # squaring out frac(2^(n-2) sqrt2) <= sqrt2/4 gives the same integer
    # inequality as the exact test, so no gap is expected
    for n in range(2, 10**4 + 1):
        assert sufficient_by_lemma2(n) is is_undesirable_exact(n)[0], n


@pytest.mark.parametrize("n, expected", [(13, True), (65, False), (5, True), (2, False)])
def test_pattern_examples(n, expected):
    assert sufficient_by_patterns(n) is expected


def test_patterns_match_word_definition():
    b = oracles.sqrt2_bits(400)
    members = oracles.P(b)
    for n in range(2, 390):
        assert sufficient_by_patterns(n) == (n in members)


def test_count_examples():
    assert count_undesirable(2, "exact") == (0, Fraction(0))
    d13, _ = count_undesirable(13, "exact")
    d12, _ = count_undesirable(12, "exact")
    assert d13 == d12 + 1
    assert count_undesirable(20, "brute") == count_undesirable(20, "exact")


def test_count_errors():
    with pytest.raises(DomainError):
        count_undesirable(1)
    with pytest.raises(DomainError):
        count_undesirable(10, "astrology")
    with pytest.raises(ResourceLimitError):
        count_undesirable(40, "brute")


def test_pattern_count_below_exact():
    for N in (10, 100, 1000, 10**4):
        assert count_undesirable(N, "patterns")[0] <= count_undesirable(N, "exact")[0]


def test_report_consistency():
    for n in range(2, 200):
        r = undesirability_report(n, brute=n <= 16)
        assert r.consistent(), r
    r = undesirability_report(65)
    assert (r.patterns, r.lemma2, r.exact) == (False, True, True)
