import math

import pytest
from hypothesis import given, strategies as st

from oracles import isqrt_bisect, sqrt2_bits
from sqrt2patterns.errors import DomainError, ResourceLimitError
from sqrt2patterns.sqrt2 import isqrt, sqrt2_bit_stream, sqrt2_fraction_bits


@pytest.mark.parametrize("v, s", [(0, 0), (16, 4), (2**23, 2896)])
def test_isqrt_examples(v, s):
    assert isqrt(v) == s


def test_isqrt_small_exhaustive():
    for v in range(10**4 + 1):
        s = isqrt(v)
        assert s * s <= v < (s + 1) * (s + 1)


@given(st.integers(min_value=0, max_value=2**300))
def test_isqrt_matches_bisection(v):
    assert isqrt(v) == isqrt_bisect(v)


def test_isqrt_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


def test_known_bits():
    assert sqrt2_fraction_bits(15).bits == "011010100000100"
    b3 = sqrt2_fraction_bits(3)
    assert (b3.bit(1), b3.bit(2), b3.bit(3)) == (0, 1, 1)
    assert sqrt2_fraction_bits(1).bits == "0"


def test_bits_match_greedy_oracle():
    assert sqrt2_fraction_bits(500).bits == sqrt2_bits(500)


def test_prefix_stability():
    long = sqrt2_fraction_bits(2000).bits
    for j in range(1, 300):
        assert sqrt2_fraction_bits(j).bits == long[:j]


@pytest.mark.parametrize("k", [1, 2, 7, 64, 1000])
def test_bracketing(k):
    d = sqrt2_fraction_bits(k)
    v = d.value()
    assert v * v <= 2 * 4**k < (v + 1) ** 2
    assert d.brackets_sqrt2()
    assert d.precision == k


def test_stream_consistent_with_batch():
    it = sqrt2_bit_stream(chunk=16)
    got = "".join(str(next(it)) for _ in range(3000))
    assert got == sqrt2_fraction_bits(3000).bits


def test_limits():
    with pytest.raises(DomainError):
        sqrt2_fraction_bits(0)
    with pytest.raises(ResourceLimitError):
        sqrt2_fraction_bits(100, max_precision=50)
    with pytest.raises(IndexError):
        sqrt2_fraction_bits(3).bit(4)
