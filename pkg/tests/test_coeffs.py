from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rightlcm.coeffs import Gaussian, exact_sqrt, format_gaussian, parse_gaussian

rats = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 12))
gauss = st.builds(Gaussian, rats, rats)


def test_basic_arithmetic():
    z = Gaussian(Fraction(1, 2), 2)
    assert z * z.conjugate() == Gaussian(Fraction(17, 4))
    assert (z - z).abs2() == 0
    assert Gaussian(0, 1) * Gaussian(0, 1) == -1


@pytest.mark.parametrize("text,value", [
    ("3", Gaussian(3)), ("-1/2", Gaussian(Fraction(-1, 2))), ("2/3+1/2 i", Gaussian(Fraction(2, 3), Fraction(1, 2))),
    ("i", Gaussian(0, 1)), ("-i", Gaussian(0, -1)), ("1-2i", Gaussian(1, -2)),
])
def test_parse(text, value):
    assert parse_gaussian(text) == value


@given(gauss)
def test_format_parse_roundtrip(z):
    assert parse_gaussian(format_gaussian(z)) == z


@given(gauss, gauss, gauss)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * b).abs2() == a.abs2() * b.abs2()


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(2)) is None
