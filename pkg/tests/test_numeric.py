from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from divrec.numeric import (
    Exponent,
    MixedArithmeticError,
    combine,
    format_value,
    parse_value,
    pentagonal_classify,
    pentagonal_stream,
    popcount,
    pow_value,
    thue_morse_sign,
    values_equal,
)


@pytest.mark.parametrize("n, expected", [(0, 0), (11, 3), (64, 1), (2**70 - 1, 70)])
def test_popcount(n, expected):
    assert popcount(n) == expected


def test_thue_morse_sign_examples():
    assert thue_morse_sign(0) == 1
    assert thue_morse_sign(3) == 1
    # t(2i-1) at i = 2 equals -t(1)
    assert thue_morse_sign(2 * 2 - 1) == -thue_morse_sign(1) == 1
    assert [thue_morse_sign(n) for n in range(8)] == [1, -1, -1, 1, -1, 1, 1, -1]


@given(st.integers(min_value=0, max_value=2**80))
def test_thue_morse_doubling(n):
    assert thue_morse_sign(2 * n) == thue_morse_sign(n)
    assert thue_morse_sign(2 * n + 1) == -thue_morse_sign(n)


@pytest.mark.parametrize("k", range(1, 13))
def test_odd_index_signs_cancel_over_blocks(k):
    assert sum(thue_morse_sign(2 * l - 1) for l in range(1, 2**k + 1)) == 0


def test_pentagonal_stream_examples():
    terms = pentagonal_stream(15)
    assert [t.value for t in terms] == [1, 2, 5, 7, 12, 15]
    assert [t.sign for t in terms] == [1, 1, -1, -1, 1, 1]
    assert [(t.m, t.branch) for t in pentagonal_stream(1)] == [(1, "minus")]
    assert [t.value for t in pentagonal_stream(4)] == [1, 2]


def test_pentagonal_stream_matches_formula():
    brute = sorted({m * (3 * m - 1) // 2 for m in range(1, 60)} | {m * (3 * m + 1) // 2 for m in range(1, 60)})
    terms = pentagonal_stream(3000)
    assert [t.value for t in terms] == [v for v in brute if v <= 3000]
    for t in terms:
        assert t.value == (t.m * (3 * t.m - 1) // 2 if t.branch == "minus" else t.m * (3 * t.m + 1) // 2)
        assert t.sign == (-1) ** (t.m - 1)


def test_pentagonal_classify_examples():
    five = pentagonal_classify(5)
    assert (five.m, five.branch, five.sign) == (2, "minus", -1)
    assert pentagonal_classify(6) is None
    one = pentagonal_classify(1)
    assert (one.m, one.branch, one.sign) == (1, "minus", 1)


def test_pentagonal_classify_agrees_with_stream():
    stream = {t.value: t for t in pentagonal_stream(5000)}
    for n in range(1, 5001):
        assert pentagonal_classify(n) == stream.get(n)


def test_pow_value_examples():
    assert pow_value(2, 3) == 8
    assert pow_value(2, -1) == Fraction(1, 2)
    assert isinstance(pow_value(2, -1), Fraction)
    assert pow_value(3, 0) == 1
    assert pow_value(4, 0.5) == pytest.approx(2.0, rel=1e-15)
    with pytest.raises(ValueError):
        pow_value(0, 1)


@given(st.integers(1, 500), st.integers(1, 500), st.integers(-6, 6))
def test_pow_value_multiplicative(a, b, x):
    assert pow_value(a * b, x) == pow_value(a, x) * pow_value(b, x)


def test_exponent_modes():
    assert Exponent.parse("2").exact
    assert not Exponent.parse("0.5").exact
    assert not Exponent(2.0).exact
    with pytest.raises(TypeError):
        Exponent(True)
    with pytest.raises(ValueError):
        Exponent(float("nan"))


def test_mixed_values_rejected():
    with pytest.raises(MixedArithmeticError):
        values_equal(1, 1.0)
    with pytest.raises(MixedArithmeticError):
        values_equal(Fraction(1, 2), 0.5)
    assert values_equal(1.0, 1.0 + 1e-12)
    assert not values_equal(1.0, 1.0 + 1e-6)


def test_combine_exact_and_real():
    assert combine([(3, Fraction(1, 2)), (-1, Fraction(1, 4))], Exponent(-1)) == Fraction(5, 4)
    assert combine([(1, 1e16), (1, 1.0), (-1, 1e16)], Exponent(0.5)) == 1.0


@pytest.mark.parametrize(
    "value, text",
    [(12, "12"), (-3, "-3"), (Fraction(3, 4), "3/4"), (Fraction(4, 2), "2"), (2.0**0.5, "1.41421356237"), (1.5e20, "150000000000000000000")],
)
def test_format_value(value, text):
    assert format_value(value) == text


@given(st.fractions())
def test_format_round_trips_exact(value):
    assert parse_value(format_value(value)) == value
