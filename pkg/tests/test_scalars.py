from fractions import Fraction

import pytest
from hypothesis import given

from liemodels.scalars import (GaussianRational, UnsupportedParameterError, format_scalar,
                               gaussian_sqrt, parse_gaussian, parse_rational, parse_scalar,
                               rational_sqrt)
from strategies import gaussians, rationals


@pytest.mark.parametrize("q, text", [
    (Fraction(3), "3"), (Fraction(-3, 4), "-3/4"), (Fraction(0), "0"), (Fraction(10, 6), "5/3"),
])
def test_rational_grammar(q, text):
    assert format_scalar(q) == text
    assert parse_rational(text) == q


@pytest.mark.parametrize("z, text", [
    (GaussianRational(1, 1), "1+1*i"),
    (GaussianRational(0, -1), "0-1*i"),
    (GaussianRational(Fraction(-1, 3), Fraction(2, 3)), "-1/3+2/3*i"),
])
def test_gaussian_grammar(z, text):
    assert format_scalar(z) == text
    assert parse_gaussian(text) == z


@pytest.mark.parametrize("bad", ["1.5", "1e3", "sqrt(2)", "", "1/0", "2/-3"])
def test_rejects_non_exact_text(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


@given(gaussians)
def test_gaussian_round_trip(z):
    assert parse_gaussian(format_scalar(z)) == z


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_i_squared():
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1, 0)
    assert i ** 4 == GaussianRational(1, 0)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(UnsupportedParameterError, match="sqrt"):
        rational_sqrt(2, "sqrt")
    with pytest.raises(UnsupportedParameterError):
        rational_sqrt(-4)


def test_gaussian_sqrt_principal():
    z = gaussian_sqrt(GaussianRational(0, 2))          # (1+i)^2 = 2i
    assert z == GaussianRational(1, 1)
    w = gaussian_sqrt(GaussianRational(3, 4))
    assert w * w == GaussianRational(3, 4) and w.re > 0
    with pytest.raises(UnsupportedParameterError):
        gaussian_sqrt(GaussianRational(0, 1))
