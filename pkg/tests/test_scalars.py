from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qdbezout.errors import ExactModeUnavailable, InvalidInput
from qdbezout.scalars import (DOUBLE, EXACT, GaussRat, conj, format_scalar, parse_scalar,
                              snap_gauss)

gauss = st.builds(GaussRat, st.fractions(max_denominator=50), st.fractions(max_denominator=50))


@pytest.mark.parametrize("text, value", [
    ("3", 3), ("-2.5", -2.5), ("1-2i", 1 - 2j), ("-i", -1j), ("4j", 4j), ("i", 1j),
    ("1e-3+2e3i", 0.001 + 2000j), (" 2 + 3i ", 2 + 3j),
])
def test_parse_double(text, value):
    assert parse_scalar(text) == value


def test_parse_exact_form():
    x = parse_scalar("(3-4i)/5", EXACT)
    assert x == GaussRat(Fraction(3, 5), Fraction(-4, 5))
    # the exact form is exact even when double mode is requested
    assert parse_scalar("(1+1i)/3", DOUBLE) == pytest.approx((1 + 1j) / 3)


@pytest.mark.parametrize("bad", ["", "abc", "1+", "(1+i)/0", "i2", True, None])
def test_parse_rejects(bad):
    with pytest.raises(InvalidInput):
        parse_scalar(bad)


def test_format():
    assert format_scalar(GaussRat(Fraction(6, 4), -3)) == "(3-6i)/2"
    assert format_scalar(GaussRat(0)) == "(0+0i)/1"
    assert format_scalar(2 - 0.5j) == "2-0.5i"
    assert format_scalar(3 + 0j) == "3+0i"


@given(gauss)
def test_canonical_round_trip(x):
    a, b, c = x.canonical()
    assert c > 0
    from math import gcd
    assert gcd(gcd(a, b), c) == 1
    assert parse_scalar(format_scalar(x), EXACT) == x


@given(gauss)
def test_conj_involution(x):
    assert conj(conj(x)) == x


@given(gauss, gauss, gauss)
def test_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    if y:
        assert (x / y) * y == x


def test_snap():
    assert snap_gauss(-1j / 3) == GaussRat(0, Fraction(-1, 3))
    with pytest.raises(ExactModeUnavailable):
        snap_gauss(complex(2 ** 0.5, 0), max_den=100)


def test_mixing_with_floats_is_an_error():
    with pytest.raises(TypeError):
        GaussRat(1) + 0.5


def test_parse_plain_fraction():
    from qdbezout.scalars import EXACT, parse_scalar
    assert parse_scalar("-1/4", EXACT) == GaussRat(Fraction(-1, 4), 0)
    assert parse_scalar("3/2") == 1.5
    with pytest.raises(InvalidInput):
        parse_scalar("1/0")
