"""Polynomials and rational series in x."""

import pytest

from hankelpath.polyx import NotASeriesError, Poly, RatSeries, poly_gcd
from hankelpath.scalars import T


def test_poly_product():
    assert Poly((1, 1)) * Poly((1, -1, 1)) == Poly((1, 0, 0, 1))


def test_poly_gcd():
    g = poly_gcd(Poly((1, 0, 0, 1)), Poly((1, 1)))
    assert g == Poly((1, 1))


def test_poly_divmod():
    q, r = divmod(Poly((1, 0, 0, 1)), Poly((1, 1)))
    assert q == Poly((1, -1, 1))
    assert r.is_zero


def test_poly_ord_and_shift():
    p = Poly((0, 0, 3, 1))
    assert p.ord() == 2
    assert p.shift(2) == Poly((0, 0, 0, 0, 3, 1))
    assert Poly((0,)).is_zero


def test_series_expansion_fibonacci():
    s = RatSeries(Poly((1,)), Poly((1, -1, -1)))
    assert s.expand(8) == [1, 1, 2, 3, 5, 8, 13, 21]


def test_series_reduction():
    # (1+x^3)/(1+x) reduces to 1-x+x^2
    s = RatSeries(Poly((1, 0, 0, 1)), Poly((1, 1)))
    assert s.is_polynomial
    assert s.expand(4) == [1, -1, 1, 0]


def test_series_requires_invertible_denominator():
    with pytest.raises(NotASeriesError):
        RatSeries(Poly((1,)), Poly((0, 1)))


def test_series_arithmetic():
    x = RatSeries.X
    geom = RatSeries.ONE / (RatSeries.ONE - x)
    assert geom.expand(5) == [1, 1, 1, 1, 1]
    assert (geom - geom).is_zero
    assert (geom * (RatSeries.ONE - x)).expand(3) == [1, 0, 0]


def test_series_ord():
    s = RatSeries(Poly((0, 0, 1)), Poly((1, 1)))
    assert s.ord() == 2
    assert s.at_zero() == 0


def test_truncate_poly():
    s = RatSeries(Poly((1,)), Poly((1, -1)))
    assert s.truncate_poly(3) == Poly((1, 1, 1, 1))


def test_series_with_t_coefficients():
    s = RatSeries(Poly((1,)), Poly((1, -T)))
    assert s.expand(4) == [1, T, T * T, T ** 3]
    assert s.specialize(2).expand(4) == [1, 2, 4, 8]


def test_json_roundtrip():
    s = RatSeries(Poly((1, T)), Poly((1, 0, -1)))
    assert RatSeries.from_json(s.to_json()) == s
