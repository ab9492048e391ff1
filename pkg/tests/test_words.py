import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from sqrt2patterns.errors import DomainError
from sqrt2patterns.sqrt2 import sqrt2_fraction_bits
from sqrt2patterns.words import (
    BinaryWord,
    all_words,
    count_patterns,
    pattern_indices,
    prefix_rates,
    prefix_series,
    take,
    zero_indices,
)

words = st.text(alphabet="01", max_size=40)
B15 = "011010100000100"


def test_zero_examples():
    assert zero_indices("011") == {1}
    assert zero_indices("1111") == set()
    assert len(zero_indices(B15)) == 10


def test_pattern_examples():
    assert pattern_indices("00") == {2}
    assert pattern_indices(B15) == {5, 7, 9, 10, 11, 12, 13, 15}
    assert pattern_indices("01011") == set()
    assert pattern_indices("") == set()
    assert pattern_indices("0") == set()


def test_patterns_straddling_the_end_do_not_count():
    assert pattern_indices("0100") == {2, 4}
    assert pattern_indices("010") == pattern_indices("0101") == set()
    assert pattern_indices("01010") == {2}


@given(words)
def test_pattern_indices_match_definition(w):
    assert pattern_indices(w) == oracles.P(w)
    assert zero_indices(w) == oracles.Z(w)


@given(words)
def test_membership_needs_preceding_zero(w):
    for i in pattern_indices(w):
        assert i >= 2 and w[i - 2] == "0"


def test_injection_bound_exhaustive():
    for n in range(15):
        for w in all_words(n):
            assert count_patterns(w) <= w.count("0")


@settings(max_examples=300)
@given(st.text(alphabet="01", min_size=5, max_size=5), words, words, words, words)
def test_locality(window, left1, left2, right1, right2):
    # membership of the index whose window is w_[i-1, i+3] ignores the context
    verdicts = {len(left) + 2 in pattern_indices(left + window + right)
                for left, right in ((left1, right1), (left2, right2), ("", ""))}
    assert len(verdicts) == 1


@given(st.text(alphabet="01", min_size=1, max_size=200))
def test_prefix_series_matches_direct(w):
    series = prefix_series(w, range(len(w) + 1))
    for e in series:
        assert e.z_count == w[: e.n].count("0")
        assert e.p_count == len(oracles.P(w[: e.n]))


def test_large_count_path_agrees():
    b = sqrt2_fraction_bits(20000).bits
    assert count_patterns(b) == len(oracles.P(b))


def test_prefix_rates_examples():
    e = prefix_rates(itertools.repeat(0), 10)
    assert (e.z_rate, e.p_rate) == (1, Fraction(9, 10))
    e = prefix_rates(itertools.cycle([0, 1, 0, 1, 1]), 100)
    assert (e.z_rate, e.p_rate) == (Fraction(2, 5), 0)
    e = prefix_rates(B15, 15)
    assert (e.z_rate, e.p_rate) == (Fraction(10, 15), Fraction(8, 15))
    assert e.p_count <= e.z_count <= e.n


def test_prefix_rates_errors():
    with pytest.raises(DomainError):
        prefix_rates("0101", 5)
    with pytest.raises(DomainError):
        take(iter([0, 1]), 3)


def test_binary_word_api():
    w = BinaryWord("0110")
    assert len(w) == 4
    assert (w.at(1), w.at(2)) == (0, 1)
    assert w.prefix(2) == "01"
    assert w.subword(2, 3) == "11"
    assert w + "1" == "01101"
    assert BinaryWord("01") * 3 == "010101"
    assert BinaryWord("1011") < BinaryWord("1100")
    assert not BinaryWord("0010") < BinaryWord("0010")
    assert BinaryWord([1, 0, 1]) == "101"
    assert BinaryWord.from_int(5, 4) == "0101"
    assert list(w) == [0, 1, 1, 0]
    assert w.contains("11")
    with pytest.raises(DomainError):
        BinaryWord("012")
    with pytest.raises(IndexError):
        w.at(0)
