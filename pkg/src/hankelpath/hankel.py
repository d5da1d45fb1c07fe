"""Hankel matrices, exact determinants, and periodicity detection.

Determinants are computed fraction-free (Bareiss) over integer or
t-polynomial entries and by field Gaussian elimination otherwise; both are
exact, singular matrices simply return 0.  det of the empty matrix is 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import RatFunc, Scalar, scalar_div


class InsufficientTermsError(ValueError):
    pass


Matrix = List[List[Scalar]]


def hankel_matrix(terms: Sequence[Scalar], n: int, shift: int = 0) -> Matrix:
    """The n x n matrix with (i,j) entry terms[i+j+shift] (0-indexed)."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    need = 2 * n + shift - 1
    if n > 0 and len(terms) < need:
        raise InsufficientTermsError(
            f"need {need} terms for order {n} shift {shift}, got {len(terms)}")
    return [[terms[i + j + shift] for j in range(n)] for i in range(n)]


def _is_fraction_free(entry: Scalar) -> bool:
    if isinstance(entry, int):
        return True
    if isinstance(entry, Fraction):
        return entry.denominator == 1
    if isinstance(entry, RatFunc):
        return entry.is_polynomial
    return False


def _exact_div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in elimination")
        return q
    return scalar_div(a, b)


def det_bareiss(matrix: Matrix) -> Scalar:
    """Fraction-free elimination; all divisions are exact in the entry ring."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev: Scalar = 1
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(pivot * row_i[j] - head * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result


def det_gauss(matrix: Matrix) -> Scalar:
    """Field Gaussian elimination with first-nonzero pivoting."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[Fraction(e) if isinstance(e, int) else e for e in row]
         for row in matrix]
    sign = 1
    det: Scalar = 1
    for k in range(n):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            if not m[i][k]:
                continue
            factor = scalar_div(m[i][k], pivot)
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - factor * m[k][j]
            m[i][k] = 0
    det = det if sign == 1 else -det
    if isinstance(det, Fraction) and det.denominator == 1:
        return det.numerator
    return det


def det_cofactor(matrix: Matrix) -> Scalar:
    """Cofactor expansion along the first row; independent slow oracle."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    acc: Scalar = 0
    for j in range(n):
        if not matrix[0][j]:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def det_exact(matrix: Matrix) -> Scalar:
    if all(_is_fraction_free(e) for row in matrix for e in row):
        return det_bareiss(matrix)
    return det_gauss(matrix)


def det_sequence(terms: Sequence[Scalar], n_max: int,
                 shift: int = 0) -> List[Scalar]:
    """[det H_1, ..., det H_{n_max}] for the (shifted) Hankel matrices."""
    return [det_exact(hankel_matrix(terms, n, shift))
            for n in range(1, n_max + 1)]


def detect_period(seq: Sequence[Scalar],
                  max_period: int) -> Optional[Tuple[int, int]]:
    """Smallest certified (period, preperiod offset), or None.

    A period p with offset m needs seq[i] == seq[i+p] for all m <= i <
    len(seq)-p.  To count as certified the surviving comparisons must span
    at least two full periods and at least half of the comparable range;
    the second condition stops a short run of equal terms near the end
    from masquerading as a tiny eventual period.  Fewer terms yield None
    rather than an extrapolated claim.
    """
    if not seq:
        raise ValueError("empty sequence")
    n = len(seq)
    for p in range(1, max_period + 1):
        offset = 0
        for i in range(n - p - 1, -1, -1):
            if seq[i] != seq[i + p]:
                offset = i + 1
                break
        evidence = n - p - offset
        if evidence >= 2 * p and evidence >= (n - p + 1) // 2:
            return (p, offset)
    return None
