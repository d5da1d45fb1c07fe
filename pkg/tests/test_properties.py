"""Randomized algebraic invariants."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hankelpath.hankel import det_cofactor, det_exact
from hankelpath.pathcount import PathParams, f_series
from hankelpath.polyx import Poly, RatSeries
from hankelpath.scalars import scalar_parse, scalar_str

coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=5)
unit_coeffs = coeffs.filter(lambda c: c[0] != 0)


@given(coeffs, coeffs)
def test_series_product_is_cauchy_product(a, b):
    pa, pb = Poly(tuple(a)), Poly(tuple(b))
    prod = RatSeries.from_poly(pa) * RatSeries.from_poly(pb)
    n = len(a) + len(b)
    want = [sum(pa.coeff(i) * pb.coeff(k - i) for i in range(k + 1))
            for k in range(n)]
    assert prod.expand(n) == want


@given(coeffs, unit_coeffs)
def test_expansion_reconstructs_series(num, den):
    s = RatSeries(Poly(tuple(num)), Poly(tuple(den)))
    n = 12
    head = Poly(tuple(s.expand(n)))
    tail = s - RatSeries.from_poly(head)
    assert tail.is_zero or tail.ord() >= n


@given(coeffs, unit_coeffs)
def test_scalar_print_parse_roundtrip(num, den):
    from hankelpath.scalars import scalar_div
    p = scalar_parse("+".join(f"{c}*t^{i}" for i, c in enumerate(num)) or "0")
    q = scalar_parse("+".join(f"{c}*t^{i}" for i, c in enumerate(den)))
    value = scalar_div(p, q)
    assert scalar_parse(scalar_str(value)) == value


@given(st.integers(1, 3), st.integers(-3, 3), st.integers(1, 4))
@settings(max_examples=30)
def test_specialization_commutes_with_counting(ell, tnum, tden):
    from hankelpath.scalars import T, specialize_scalar
    t = Fraction(tnum, tden)
    symbolic = f_series(PathParams(ell, T), 8)
    direct = f_series(PathParams(ell, t), 8)
    assert [specialize_scalar(c, t) for c in symbolic] == direct


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                min_size=3, max_size=3))
@settings(max_examples=40)
def test_det_methods_agree(rows):
    assert det_exact([r[:] for r in rows]) == det_cofactor(rows)
