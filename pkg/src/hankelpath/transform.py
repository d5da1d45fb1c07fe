"""Quadratic continued-fraction transformations of generating functions.

A canonical state is F = x^d / (u(x) + x^k v(x) F(x)) with u(0), v(0) != 0
and k >= 1.  Each transformation step maps one state to another while
relating their Hankel determinant sequences by a sign, scalar powers, and
an index shift; iterating and detecting a revisited state closes a
determinant recurrence such as det H_n = -det H_{n-7}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .polyx import NotASeriesError, Poly, RatSeries
from .scalars import Scalar, scalar_inv, scalar_str, specialize_scalar


class CanonicalizationError(ValueError):
    """The quadratic form has no canonical power-series state."""


class RationalTerminal(Exception):
    """The transformed series degenerates to a rational function."""


@dataclass(frozen=True)
class QuadraticForm:
    """a(x) F^2 + b(x) F + c(x) = 0."""

    a: RatSeries
    b: RatSeries
    c: RatSeries

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(),
                "c": self.c.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadraticForm":
        return cls(RatSeries.from_json(obj["a"]),
                   RatSeries.from_json(obj["b"]),
                   RatSeries.from_json(obj["c"]))


@dataclass(frozen=True)
class QuadFE:
    """Canonical state F = x^d / (u + x^k v F)."""

    d: int
    k: int
    u: RatSeries
    v: RatSeries

    def __post_init__(self):
        if self.d < 0 or self.k < 1:
            raise CanonicalizationError("need d >= 0 and k >= 1")
        if not self.u.at_zero() or not self.v.at_zero():
            raise CanonicalizationError("u(0) and v(0) must be nonzero")

    def quadratic_form(self) -> QuadraticForm:
        # F (u + x^k v F) = x^d
        return QuadraticForm(
            a=self.v * RatSeries.x_power(self.k),
            b=self.u,
            c=-RatSeries.x_power(self.d),
        )

    def specialize(self, value: Scalar) -> "QuadFE":
        return QuadFE(self.d, self.k, self.u.specialize(value),
                      self.v.specialize(value))

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k,
                "u": self.u.to_json(), "v": self.v.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadFE":
        return cls(int(obj["d"]), int(obj["k"]),
                   RatSeries.from_json(obj["u"]),
                   RatSeries.from_json(obj["v"]))

    def __str__(self):
        return f"F = x^{self.d} / ({self.u} + x^{self.k}*({self.v})*F)"


@dataclass(frozen=True)
class ULSplit:
    """u = u_L + x^(d+2) u_H with deg u_L <= d+1."""

    u_low: Poly
    u_high: RatSeries


@dataclass(frozen=True)
class FactorChain:
    """det H_n(F_start) = sign * prod base_i^(n - offset_i) * det H_{n-delta}(F_end)."""

    sign: int = 1
    factors: Tuple[Tuple[Scalar, int], ...] = ()
    delta: int = 0

    def then(self, other: "FactorChain") -> "FactorChain":
        # the later chain applies at sizes already shrunk by self.delta
        rebased = tuple((base, off + self.delta) for base, off in other.factors)
        return FactorChain(self.sign * other.sign,
                           self.factors + rebased,
                           self.delta + other.delta)

    def scale_at(self, n: int) -> Scalar:
        acc: Scalar = self.sign
        for base, offset in self.factors:
            acc = acc * base ** (n - offset)
        return acc

    def specialize(self, value: Scalar) -> "FactorChain":
        return FactorChain(self.sign,
                           tuple((specialize_scalar(b, value), o)
                                 for b, o in self.factors),
                           self.delta)

    def to_json(self) -> dict:
        return {"sign": self.sign, "delta": self.delta,
                "factors": [{"base": scalar_str(b), "offset": o}
                            for b, o in self.factors]}


@dataclass(frozen=True)
class Step:
    kind: str  # normalize | quadratic | shift
    before: QuadFE
    after: QuadFE
    chain: FactorChain
    note: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "before": self.before.to_json(),
                "after": self.after.to_json(), "chain": self.chain.to_json(),
                "note": self.note}


@dataclass
class OrbitTrace:
    states: List[QuadFE]
    steps: List[Step]
    # chains[i] relates state 0 to state i
    chains: List[FactorChain]
    status: str  # cycle | no_cycle | rational
    cycle: Optional[Tuple[int, int]] = None
    recurrence: Optional[FactorChain] = None

    def to_json(self) -> dict:
        obj = {
            "status": self.status,
            "states": [s.to_json() for s in self.states],
            "steps": [s.to_json() for s in self.steps],
            "cycle": list(self.cycle) if self.cycle else None,
            "recurrence": self.recurrence.to_json() if self.recurrence else None,
        }
        return obj


def canonicalize(form: QuadraticForm) -> QuadFE:
    """Rewrite aF^2 + bF + c = 0 as the canonical F = x^d/(u + x^k v F)."""
    a, b, c = form.a, form.b, form.c
    if a.is_zero:
        raise CanonicalizationError(
            "a = 0: the equation is linear, F is rational")
    if not b.at_zero():
        raise CanonicalizationError(
            "b(0) = 0: no canonical power-series branch")
    if c.is_zero:
        raise CanonicalizationError("c = 0: F = 0 or rational")
    minus_c = -c
    d = minus_c.ord()
    w = minus_c / RatSeries.x_power(d)
    u = b / w
    av = a / w
    k = av.ord()
    if k == 0:
        raise CanonicalizationError("k = 0: the solution is not unique")
    v = av / RatSeries.x_power(k)
    return QuadFE(d, k, u, v)


def split_u(fe: QuadFE) -> ULSplit:
    """Unique split u = u_L + x^(d+2) u_H with deg u_L <= d+1."""
    u_low = fe.u.truncate_poly(fe.d + 1)
    diff = fe.u - RatSeries.from_poly(u_low)
    if diff.is_zero:
        u_high = RatSeries.ZERO
    else:
        u_high = diff / RatSeries.x_power(fe.d + 2)
    return ULSplit(u_low, u_high)


def normalize_const(fe: QuadFE) -> Tuple[QuadFE, FactorChain]:
    """Scale to u(0) = 1: G = u(0) F, det H_n(F) = u(0)^-n det H_n(G)."""
    u0 = fe.u.at_zero()
    if u0 == 1:
        return fe, FactorChain()
    inv = scalar_inv(u0)
    new = QuadFE(fe.d, fe.k, fe.u * inv, fe.v * (inv * inv))
    return new, FactorChain(sign=1, factors=((inv, 0),), delta=0)


def _quadratic_sign(d: int) -> int:
    return -1 if (d * (d + 1) // 2) % 2 else 1


def transform_quadratic(fe: QuadFE) -> Tuple[QuadFE, FactorChain, str]:
    """The u(0) = 1 step; branch on k = 1 (shifted Hankel) vs k >= 2."""
    if fe.u.at_zero() != 1:
        raise CanonicalizationError("normalize to u(0) = 1 first")
    split = split_u(fe)
    u_low = RatSeries.from_poly(split.u_low)
    u_high = split.u_high
    d, k = fe.d, fe.k
    den_series = u_low - u_high * RatSeries.x_power(d + 2)
    if k == 1:
        num = -fe.v - u_low * u_high * RatSeries.x_power(1)
        a_new = -RatSeries.x_power(d + 1)
        note = (f"G = -x*uH - x^-{d}*v*F; "
                f"det H1_(n-{d + 1})(G) = {_quadratic_sign(d)} * det H_n(F)")
    else:
        num = -fe.v * RatSeries.x_power(k - 2) - u_low * u_high
        a_new = -RatSeries.x_power(d + 2)
        note = (f"G = -uH - x^{k - d - 2}*v*F; "
                f"det H_(n-{d + 1})(G) = {_quadratic_sign(d)} * det H_n(F)")
    if num.is_zero:
        raise RationalTerminal("transformed numerator vanished; G = 0")
    new = canonicalize(QuadraticForm(a=a_new, b=den_series, c=-num))
    chain = FactorChain(sign=_quadratic_sign(d), factors=(), delta=d + 1)
    return new, chain, note


def series_of_fe(fe: QuadFE, n_max: int) -> List[Scalar]:
    """First n_max+1 coefficients of the unique series solution."""
    count = n_max + 1
    u = fe.u.expand(count)
    v = fe.v.expand(count)
    u0 = u[0]
    f: List[Scalar] = []
    f2: List[Scalar] = []  # running self-convolution of f
    for n in range(count):
        acc: Scalar = 1 if n == fe.d else 0
        for m in range(1, n + 1):
            if u[m]:
                acc = acc - u[m] * f[n - m]
        # subtract [x^n] (x^k v F^2); uses only f[0..n-1] since k >= 1
        for j in range(0, n - fe.k + 1):
            if v[j]:
                acc = acc - v[j] * f2[n - fe.k - j]
        coeff = acc if u0 == 1 else _div(acc, u0)
        f.append(coeff)
        # extend the convolution with the new coefficient
        f2.append(sum(f[i] * f[n - i] for i in range(n + 1)))
    return f


def _div(a: Scalar, b: Scalar) -> Scalar:
    from .scalars import scalar_div
    return scalar_div(a, b)


def shift_out(fe: QuadFE, j: int) -> QuadFE:
    """Drop the first j coefficients: the state of S where F = p(x) + x^j S."""
    if j < 1:
        raise ValueError("shift must be at least 1")
    prefix = Poly(series_of_fe(fe, j - 1))
    form = fe.quadratic_form()
    a, b, c = form.a, form.b, form.c
    p = RatSeries.from_poly(prefix)
    const_part = a * p * p + b * p + c
    xj = RatSeries.x_power(j)
    if const_part.is_zero:
        raise RationalTerminal("series truncates; the tail is rational zero")
    if const_part.ord() < j:
        raise AssertionError("prefix does not match the series expansion")
    new_form = QuadraticForm(
        a=a * xj,
        b=a * p * RatSeries.const(2) + b,
        c=const_part / xj,
    )
    return canonicalize(new_form)


def fe_equal(a: QuadFE, b: QuadFE) -> bool:
    return a.d == b.d and a.k == b.k and a.u == b.u and a.v == b.v


def apply_T(fe: QuadFE) -> Tuple[QuadFE, FactorChain, List[Step]]:
    """One transformation step: normalize, or quadratic (+re-shift when k=1)."""
    u0 = fe.u.at_zero()
    if u0 != 1:
        new, chain, = normalize_const(fe)
        step = Step("normalize", fe, new, chain,
                    f"G = ({scalar_str(u0)}) * F")
        return new, chain, [step]
    if fe.k >= 2:
        new, chain, note = transform_quadratic(fe)
        step = Step("quadratic", fe, new, chain, note)
        return new, chain, [step]
    # k = 1: the quadratic step lands on a shifted Hankel relation; convert
    # it to a plain one by dropping the constant term of G
    mid, chain, note = transform_quadratic(fe)
    final = shift_out(mid, 1)
    steps = [Step("quadratic", fe, mid, chain, note),
             Step("shift", mid, final, FactorChain(),
                  "S = (G - G(0))/x; H^1_n(G) = H_n(S)")]
    return final, chain, steps


def orbit(fe: QuadFE, max_steps: int = 16) -> OrbitTrace:
    """Iterate apply_T, detecting a revisited state against all prior ones."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    states = [fe]
    chains = [FactorChain()]
    steps: List[Step] = []
    for _ in range(max_steps):
        try:
            new, chain, new_steps = apply_T(states[-1])
        except RationalTerminal:
            return OrbitTrace(states, steps, chains, status="rational")
        steps.extend(new_steps)
        chains.append(chains[-1].then(chain))
        states.append(new)
        for i, prior in enumerate(states[:-1]):
            if fe_equal(prior, new):
                # chains[j] maps state 0 to j; strip the common prefix to
                # get the chain around the cycle from state i to itself
                rec = _between(chains, i, len(states) - 1)
                return OrbitTrace(states, steps, chains, status="cycle",
                                  cycle=(i, len(states) - 1), recurrence=rec)
    return OrbitTrace(states, steps, chains, status="no_cycle")


def _between(chains: List[FactorChain], i: int, j: int) -> FactorChain:
    """Chain relating state i to state j, from the cumulative chains."""
    whole, prefix = chains[j], chains[i]
    # whole = prefix.then(rest): strip the prefix and rebase offsets
    rest_factors = whole.factors[len(prefix.factors):]
    return FactorChain(
        sign=whole.sign * prefix.sign,
        factors=tuple((b, o - prefix.delta) for b, o in rest_factors),
        delta=whole.delta - prefix.delta,
    )
