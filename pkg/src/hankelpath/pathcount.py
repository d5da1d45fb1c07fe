"""Weighted lattice-path counting and the signed path-tuple oracle.

Paths use steps U = (1,1), D = (1,-1), and H = (ell,0); H carries weight t,
the others weight 1, and every vertex stays weakly above the x-axis.  The
sequence f(n) is produced three independent ways (quadratic-equation
recurrence, height DP, explicit enumeration) so each can check the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from .scalars import Scalar

Point = Tuple[int, int]


class DegenerateStepError(ValueError):
    """ell = 0 with t != 0: zero-length weighted steps make path sets infinite."""


class BudgetExceededError(RuntimeError):
    """Tuple enumeration would exceed the allotted budget."""


@dataclass(frozen=True)
class PathParams:
    ell: int
    t: Scalar

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("horizontal step length must be nonnegative")
        if self.ell == 0 and self.t != 0:
            raise DegenerateStepError(
                "ell = 0 requires t = 0 (Dyck case); otherwise the weighted "
                "path set is infinite")

    @property
    def h_enabled(self) -> bool:
        # zero-length H steps are excluded outright; legal only when t = 0
        return self.ell >= 1


def f_series(params: PathParams, n_max: int) -> List[Scalar]:
    """f(0..n_max) from the recurrence of F = 1 + t x^ell F + x^2 F^2."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t, ell = params.t, params.ell
    f: List[Scalar] = [1]
    for n in range(1, n_max + 1):
        acc = sum(f[i] * f[n - 2 - i] for i in range(n - 1))
        if params.h_enabled and n - ell >= 0:
            acc = acc + t * f[n - ell]
        f.append(acc)
    return f


def f_dp_oracle(params: PathParams, n_max: int) -> List[Scalar]:
    """f(0..n_max) by direct dynamic programming over (abscissa, height)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t, ell = params.t, params.ell
    # w[x][y]: weight of paths from (0,0) to (x,y); heights above n_max-x
    # cannot return to the axis in time, so the table is triangular.
    w: List[List[Scalar]] = [[0] * (n_max + 2) for _ in range(n_max + 1)]
    w[0][0] = 1
    for x in range(1, n_max + 1):
        for y in range(0, n_max + 1 - x):
            acc = w[x - 1][y + 1]
            if y >= 1:
                acc = acc + w[x - 1][y - 1]
            if params.h_enabled and x - ell >= 0:
                acc = acc + t * w[x - ell][y]
            w[x][y] = acc
    return [w[n][0] for n in range(n_max + 1)]


def paths_weight(frm: Point, to: Point, params: PathParams) -> Scalar:
    """Total weight of nonnegative paths from `frm` to `to`; 0 if unreachable."""
    if frm[1] < 0 or to[1] < 0:
        raise ValueError("endpoints must have nonnegative ordinate")
    dx = to[0] - frm[0]
    if dx < 0:
        return 0
    if dx == 0:
        return 1 if frm[1] == to[1] else 0
    if to[1] > frm[1] + dx:
        return 0
    t, ell = params.t, params.ell
    ymax = frm[1] + dx
    w: List[List[Scalar]] = [[0] * (ymax + 2) for _ in range(dx + 1)]
    w[0][frm[1]] = 1
    for x in range(1, dx + 1):
        for y in range(0, ymax + 1):
            acc = w[x - 1][y + 1]
            if y >= 1:
                acc = acc + w[x - 1][y - 1]
            if params.h_enabled and x - ell >= 0:
                acc = acc + t * w[x - ell][y]
            w[x][y] = acc
    return w[dx][to[1]]


def enumerate_paths(frm: Point, to: Point,
                    params: PathParams) -> List[Tuple[str, frozenset, int]]:
    """All nonnegative paths frm -> to as (steps, vertex set, H count).

    Steps are emitted in lexicographic order with U < D < H.  A point path
    (frm == to) is the empty step string with the single vertex {frm}.
    """
    if frm[1] < 0 or to[1] < 0:
        raise ValueError("endpoints must have nonnegative ordinate")
    out: List[Tuple[str, frozenset, int]] = []
    steps: List[str] = []
    vertices: List[Point] = [frm]
    ell = params.ell

    def recurse(x: int, y: int, hcount: int):
        if (x, y) == to:
            out.append(("".join(steps), frozenset(vertices), hcount))
            # a path may continue past `to` and come back only if x can
            # stay put, which it cannot: every step advances x (ell >= 1)
            return
        remaining = to[0] - x
        if remaining <= 0 or remaining < abs(to[1] - y):
            return
        # U
        if True:
            steps.append("U")
            vertices.append((x + 1, y + 1))
            recurse(x + 1, y + 1, hcount)
            vertices.pop()
            steps.pop()
        # D
        if y >= 1:
            steps.append("D")
            vertices.append((x + 1, y - 1))
            recurse(x + 1, y - 1, hcount)
            vertices.pop()
            steps.pop()
        # H
        if params.h_enabled and remaining >= ell:
            steps.append("H")
            vertices.append((x + ell, y))
            recurse(x + ell, y, hcount + 1)
            vertices.pop()
            steps.pop()

    recurse(frm[0], frm[1], 0)
    return out


@dataclass(frozen=True)
class ITConfig:
    """Initial/terminal point lists prescribing endpoints for path tuples."""

    initials: Tuple[Point, ...]
    terminals: Tuple[Point, ...]

    def __post_init__(self):
        ini = [tuple(p) for p in self.initials]
        ter = [tuple(p) for p in self.terminals]
        object.__setattr__(self, "initials", tuple(ini))
        object.__setattr__(self, "terminals", tuple(ter))
        if len(ini) != len(ter) or not ini:
            raise ValueError("initials and terminals must be nonempty lists "
                             "of equal length")
        if len(set(ini)) != len(ini) or len(set(ter)) != len(ter):
            raise ValueError("config points must be distinct")
        for (x1, y1), (x2, y2) in zip(ini, ini[1:]):
            if not (x2 <= x1 <= 0 and 0 <= y1 <= y2):
                raise ValueError("initials must have x(k+1) <= x(k) <= 0 and "
                                 "0 <= y(k) <= y(k+1)")
        if not (ini[0][0] <= 0 and ini[0][1] >= 0):
            raise ValueError("initials must have x <= 0 and y >= 0")
        for (x1, y1), (x2, y2) in zip(ter, ter[1:]):
            if not (0 <= x1 <= x2 and 0 <= y1 <= y2):
                raise ValueError("terminals must have 0 <= x(k) <= x(k+1) and "
                                 "0 <= y(k) <= y(k+1)")
        if not (ter[0][0] >= 0 and ter[0][1] >= 0):
            raise ValueError("terminals must have x >= 0 and y >= 0")

    @property
    def order(self) -> int:
        return len(self.initials)

    def to_json(self, params: PathParams = None) -> dict:
        from .scalars import scalar_str
        obj = {"initials": [list(p) for p in self.initials],
               "terminals": [list(p) for p in self.terminals]}
        if params is not None:
            obj["ell"] = params.ell
            obj["t"] = scalar_str(params.t)
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "ITConfig":
        return cls(tuple(tuple(p) for p in obj["initials"]),
                   tuple(tuple(p) for p in obj["terminals"]))


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm))
                     for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions & 1 else 1


DEFAULT_LGV_BUDGET = 20_000_000


def lgv_signed_sum(config: ITConfig, params: PathParams,
                   budget: int = DEFAULT_LGV_BUDGET) -> Scalar:
    """Sum of signed weights of nonintersecting tuples over all permutations.

    Nonintersecting means pairwise disjoint step-endpoint (vertex) sets;
    crossings through the interior of a long H step are allowed.  Raises
    BudgetExceededError before enumerating if the tuple count is too large.
    """
    n = config.order
    t = params.t
    paths: List[List[List[Tuple[frozenset, int]]]] = [
        [[(vs, h) for _, vs, h in
          enumerate_paths(config.initials[i], config.terminals[j], params)]
         for j in range(n)]
        for i in range(n)
    ]
    total_tuples = 0
    for perm in permutations(range(n)):
        count = 1
        for i in range(n):
            count *= len(paths[i][perm[i]])
        total_tuples += count
    if total_tuples > budget:
        raise BudgetExceededError(
            f"{total_tuples} path tuples exceed budget {budget}")

    # accumulate t-exponent counts; weight of a tuple is t^(total H steps)
    exponent_counts: Dict[int, Scalar] = {}

    def search(rows: List[List[Tuple[frozenset, int]]], idx: int,
               used: frozenset, hsum: int, sgn: int):
        if idx == len(rows):
            exponent_counts[hsum] = exponent_counts.get(hsum, 0) + sgn
            return
        for vs, h in rows[idx]:
            if used.isdisjoint(vs):
                search(rows, idx + 1, used | vs, hsum + h, sgn)

    for perm in permutations(range(n)):
        sgn = _sign(perm)
        rows = [paths[i][perm[i]] for i in range(n)]
        # visit small path sets first: prunes the product enumeration hard
        rows.sort(key=len)
        search(rows, 0, frozenset(), 0, sgn)

    acc: Scalar = 0
    for h, count in sorted(exponent_counts.items()):
        if not count:
            continue
        acc = acc + count * t ** h
    return acc


def lgv_matrix(config: ITConfig, params: PathParams) -> List[List[Scalar]]:
    """The path-weight matrix (|P_{i,j}|) whose determinant the lemma equates."""
    n = config.order
    return [[paths_weight(config.initials[i], config.terminals[j], params)
             for j in range(n)] for i in range(n)]


def delannoy_matrix(n: int, t: Scalar) -> List[List[Scalar]]:
    """King-move count array: M[i][j] = M[i-1][j] + t*M[i-1][j-1] + M[i][j-1]."""
    if n < 1:
        raise ValueError("order must be at least 1")
    m: List[List[Scalar]] = [[1] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(1, n):
            m[i][j] = m[i - 1][j] + t * m[i - 1][j - 1] + m[i][j - 1]
    return m


def schroder_series(t: Scalar, n_max: int) -> List[Scalar]:
    """Coefficients of the non-aerated weighted solution of F = 1 + txF + xF^2."""
    f: List[Scalar] = [1]
    for n in range(1, n_max + 1):
        acc = t * f[n - 1] + sum(f[i] * f[n - 1 - i] for i in range(n))
        f.append(acc)
    return f
