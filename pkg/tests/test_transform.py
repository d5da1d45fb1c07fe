"""Canonical states, the determinant-preserving step, orbits and chains."""

import pytest

from hankelpath import verify
from hankelpath.polyx import Poly, RatSeries
from hankelpath.scalars import T, scalar_inv
from hankelpath.transform import (CanonicalizationError, FactorChain, QuadFE,
                                  QuadraticForm, apply_T, canonicalize,
                                  fe_equal, normalize_const, orbit,
                                  series_of_fe, shift_out, split_u)


def test_canonicalize_roundtrip():
    for fe in (verify.fe_ell3(), verify.fe_motzkin(),
               verify.fe_schroder_aerated(), verify.fe_schroder()):
        assert fe_equal(canonicalize(fe.quadratic_form()), fe)


def test_canonicalize_rejections():
    one = RatSeries.ONE
    x = RatSeries.X
    with pytest.raises(CanonicalizationError):
        canonicalize(QuadraticForm(RatSeries.ZERO, one, -one))
    with pytest.raises(CanonicalizationError):
        canonicalize(QuadraticForm(x, x, -one))  # b(0) = 0
    with pytest.raises(CanonicalizationError):
        canonicalize(QuadraticForm(x, one, RatSeries.ZERO))
    with pytest.raises(CanonicalizationError):
        canonicalize(QuadraticForm(one, one, -one))  # k = 0


def test_split_u():
    fe = verify.fe_ell3()  # u = 1 - x^3, d = 0
    split = split_u(fe)
    assert split.u_low == Poly((1,))
    assert split.u_high == RatSeries.from_poly(Poly((0, -1)))


def test_normalize_const():
    fe = verify.fe_schroder()  # u(0) = 1 already
    same, chain = normalize_const(fe)
    assert fe_equal(same, fe) and chain == FactorChain()

    scaled = QuadFE(fe.d, fe.k, fe.u * 2, fe.v * 4)
    new, chain = normalize_const(scaled)
    assert new.u.at_zero() == 1
    assert chain.factors == ((scalar_inv(2), 0),)
    assert chain.delta == 0


def test_series_of_fe_matches_path_counts():
    from hankelpath.pathcount import PathParams, f_series
    assert series_of_fe(verify.fe_ell3(), 12) == \
        f_series(PathParams(3, 1), 12)
    assert series_of_fe(verify.fe_motzkin(), 10) == \
        f_series(PathParams(1, T), 10)


def test_shift_out_drops_leading_coefficients():
    fe = verify.fe_motzkin()
    full = series_of_fe(fe, 9)
    shifted = shift_out(fe, 2)
    assert series_of_fe(shifted, 7) == full[2:]


def test_apply_T_preserves_determinant_relation():
    from hankelpath.hankel import det_sequence
    fe = verify.fe_motzkin_shifted_t1()
    new, chain, steps = apply_T(fe)
    n = 8
    before = det_sequence(series_of_fe(fe, 2 * n - 1), n)
    after = det_sequence(series_of_fe(new, 2 * n - 1), n)
    for i in range(chain.delta, n):
        lhs = before[i]
        rhs = chain.scale_at(i + 1) * after[i - chain.delta]
        assert lhs == rhs


def test_orbit_cycle_motzkin():
    trace = orbit(verify.fe_motzkin())
    assert trace.status == "cycle"
    assert trace.cycle == (0, 1)
    assert trace.recurrence.delta == 1
    assert trace.recurrence.sign == 1


def test_orbit_respects_max_steps():
    trace = orbit(shift_out(verify.fe_ell3(), 4), max_steps=3)
    assert trace.status == "no_cycle"
    with pytest.raises(ValueError):
        orbit(verify.fe_motzkin(), max_steps=0)


def test_chain_composition_rebases_offsets():
    chain1 = FactorChain(sign=1, factors=((2, 0),), delta=2)
    chain2 = FactorChain(sign=-1, factors=((3, 1),), delta=1)
    combined = chain1.then(chain2)
    assert combined.sign == -1
    assert combined.delta == 3
    assert combined.factors == ((2, 0), (3, 3))
    assert combined.scale_at(5) == -(2 ** 5) * (3 ** 2)


def test_fe_json_roundtrip():
    fe = verify.fe_schroder_aerated()
    assert fe_equal(QuadFE.from_json(fe.to_json()), fe)
