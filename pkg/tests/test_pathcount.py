"""Path counting: recurrence, DP oracle, enumeration, signed tuple sums."""

import pytest

from hankelpath.pathcount import (BudgetExceededError, DegenerateStepError,
                                  ITConfig, PathParams, enumerate_paths,
                                  f_dp_oracle, f_series, lgv_matrix,
                                  lgv_signed_sum, paths_weight)
from hankelpath.scalars import T
from hankelpath.hankel import det_exact

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]


def test_motzkin_numbers():
    assert f_series(PathParams(1, 1), 9) == MOTZKIN


def test_ell2_symbolic_prefix():
    terms = f_series(PathParams(2, T), 4)
    assert terms[0] == 1
    assert terms[1] == 0
    assert terms[2] == 1 + T
    assert terms[3] == 0
    assert terms[4] == 2 + 3 * T + T * T


def test_recurrence_matches_dp_oracle():
    for ell in (1, 2, 3):
        params = PathParams(ell, T)
        assert f_series(params, 12) == f_dp_oracle(params, 12)


def test_ell0_needs_t0():
    with pytest.raises(DegenerateStepError):
        PathParams(0, 1)
    # with no H steps at all the sequence is the aerated Catalan one
    assert f_series(PathParams(0, 0), 8) == [1, 0, 1, 0, 2, 0, 5, 0, 14]


def test_enumerate_small():
    paths = enumerate_paths((0, 0), (2, 0), PathParams(1, 1))
    assert sorted(s for s, _, _ in paths) == ["HH", "UD"]
    paths2 = enumerate_paths((0, 0), (2, 0), PathParams(2, 1))
    assert sorted(s for s, _, _ in paths2) == ["H", "UD"]
    hcounts = {s: h for s, _, h in paths2}
    assert hcounts == {"H": 1, "UD": 0}


def test_enumeration_agrees_with_weight_dp():
    params = PathParams(2, T)
    for to in [(4, 0), (5, 1), (3, 3)]:
        total = 0
        for _, _, h in enumerate_paths((0, 0), to, params):
            total = total + T ** h if h else total + 1
        assert total == paths_weight((0, 0), to, params)


def test_point_and_impossible_paths():
    params = PathParams(1, 1)
    assert paths_weight((2, 1), (2, 1), params) == 1
    assert paths_weight((2, 1), (1, 0), params) == 0
    assert paths_weight((0, 0), (1, 5), params) == 0


def test_itconfig_validation():
    ITConfig(((0, 0), (-1, 1)), ((1, 0), (2, 1)))
    with pytest.raises(ValueError):
        ITConfig((), ())
    with pytest.raises(ValueError):
        ITConfig(((0, 0), (0, 0)), ((1, 0), (2, 0)))
    with pytest.raises(ValueError):
        # initials must move left as the index grows
        ITConfig(((-1, 0), (0, 1)), ((1, 0), (2, 1)))
    with pytest.raises(ValueError):
        ITConfig(((0, 0),), ((-1, 0),))


def test_signed_sum_equals_determinant():
    params = PathParams(1, T)
    config = ITConfig(((0, 0), (-1, 1)), ((2, 0), (3, 1)))
    signed = lgv_signed_sum(config, params)
    det = det_exact(lgv_matrix(config, params))
    assert signed == det


def test_budget_guard():
    params = PathParams(1, 1)
    config = ITConfig(((0, 0), (-1, 1), (-2, 2)), ((4, 0), (5, 1), (6, 2)))
    with pytest.raises(BudgetExceededError):
        lgv_signed_sum(config, params, budget=2)


def test_json_roundtrip():
    config = ITConfig(((0, 0), (-1, 1)), ((1, 0), (2, 1)))
    assert ITConfig.from_json(config.to_json()) == config
