"""Hankel matrices, exact determinants, period detection."""

import random
from fractions import Fraction

import pytest

from hankelpath.hankel import (InsufficientTermsError, det_bareiss,
                               det_cofactor, det_exact, det_gauss,
                               det_sequence, detect_period, hankel_matrix)
from hankelpath.scalars import T


def test_hankel_layout():
    terms = [10, 11, 12, 13, 14]
    assert hankel_matrix(terms, 2) == [[10, 11], [11, 12]]
    assert hankel_matrix(terms, 2, shift=1) == [[11, 12], [12, 13]]
    assert hankel_matrix(terms, 1) == [[10]]


def test_insufficient_terms():
    with pytest.raises(InsufficientTermsError):
        hankel_matrix([1, 2], 2)
    with pytest.raises(InsufficientTermsError):
        hankel_matrix([1, 2, 3], 2, shift=1)


def test_empty_matrix_determinant():
    assert det_exact([]) == 1


def test_methods_agree_on_random_int_matrices():
    rng = random.Random(7)
    for n in range(1, 5):
        for _ in range(5):
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            d = det_bareiss([row[:] for row in m])
            assert d == det_gauss([row[:] for row in m])
            assert d == det_cofactor(m)
            assert d == det_exact(m)


def test_methods_agree_on_fraction_matrices():
    rng = random.Random(11)
    for _ in range(5):
        m = [[Fraction(rng.randint(-6, 6), rng.randint(1, 5))
              for _ in range(3)] for _ in range(3)]
        assert det_bareiss([r[:] for r in m]) == det_cofactor(m)
        assert det_gauss([r[:] for r in m]) == det_cofactor(m)


def test_methods_agree_on_polynomial_matrices():
    rng = random.Random(13)
    for _ in range(4):
        m = [[rng.randint(-3, 3) + rng.randint(-3, 3) * T
              for _ in range(3)] for _ in range(3)]
        assert det_bareiss([r[:] for r in m]) == det_cofactor(m)


def test_singular_and_pivoting():
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([[0, 0], [0, 0]]) == 0


def test_det_sequence():
    terms = [1, 1, 2, 4, 9, 21, 51]
    dets = det_sequence(terms, 3)
    assert dets == [det_exact(hankel_matrix(terms, n)) for n in (1, 2, 3)]


def test_detect_period_basic():
    seq = [1, 2, 3] * 5
    assert detect_period(seq, 10) == (3, 0)


def test_detect_period_with_transient():
    seq = [9, 9] + [1, 2] * 8
    assert detect_period(seq, 10) == (2, 2)


def test_detect_period_needs_evidence():
    # one full repetition is not enough to certify
    assert detect_period([1, 2, 3, 1, 2, 3], 10) is None
    # a short run of equal values at the end must not fake a period
    seq = list(range(20)) + [5, 5, 5]
    assert detect_period(seq, 5) is None


def test_detect_period_rejects_empty():
    with pytest.raises(ValueError):
        detect_period([], 5)
