"""Univariate polynomials and rational functions in the series variable x.

Coefficients are Scalars (int / Fraction / RatFunc in t); x itself never
appears inside a Scalar, so the tower Q < Q(t) < Q(t)(x) stays stratified.
A RatSeries is a reduced rational function whose denominator has constant
term 1; it stands for the formal power series num/den.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence

from .scalars import (
    RatFunc,
    Scalar,
    scalar_div,
    scalar_parse,
    scalar_str,
    specialize_scalar,
)


class NotASeriesError(ValueError):
    """Denominator vanishes at x = 0: the ratio is not a power series."""


class Poly:
    """Dense polynomial in x, ascending coefficients, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x_power(cls, m: int, c: Scalar = 1) -> "Poly":
        return cls([0] * m + [c])

    ZERO: "Poly"
    ONE: "Poly"

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def at_zero(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def ord(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no order")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable: trailing zeros were trimmed")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c: Scalar) -> "Poly":
        return Poly([c * a for a in self.coeffs])

    def shift(self, m: int) -> "Poly":
        """Multiply by x^m."""
        if self.is_zero:
            return self
        return Poly([0] * m + list(self.coeffs))

    def __divmod__(self, other: "Poly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        quo = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            c = scalar_div(rem[-1], lead)
            d = len(rem) - 1 - db
            quo[d] = c
            if c:
                for i, cb in enumerate(other.coeffs):
                    rem[d + i] = rem[d + i] - c * cb
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
            if not rem:
                break
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly([scalar_div(c, lead) for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(scalar_str(c) for c in self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for p, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = scalar_str(c)
            if p == 0:
                piece = cs
            else:
                var = "x" if p == 1 else f"x^{p}"
                if cs == "1":
                    piece = var
                elif cs == "-1":
                    piece = f"-{var}"
                else:
                    if isinstance(c, RatFunc) and not c.is_constant:
                        cs = f"({cs})"
                    piece = f"{cs}*{var}"
            if parts and not piece.startswith("-"):
                parts.append("+")
            parts.append(piece)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    def specialize(self, value: Scalar) -> "Poly":
        return Poly([specialize_scalar(c, value) for c in self.coeffs])

    def as_strings(self) -> List[str]:
        return [scalar_str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls([scalar_parse(s) for s in items])


Poly.ZERO = Poly()
Poly.ONE = Poly((1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over the coefficient field."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RatSeries:
    """num/den with den(0) = 1, num and den coprime: a formal power series."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly.ONE):
        if not isinstance(num, Poly):
            num = Poly(num)
        if not isinstance(den, Poly):
            den = Poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = Poly.ZERO, Poly.ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        c0 = den.at_zero()
        if not c0:
            raise NotASeriesError(
                f"denominator {den} vanishes at x=0; not a power series")
        if c0 != 1:
            num = Poly([scalar_div(c, c0) for c in num.coeffs])
            den = Poly([scalar_div(c, c0) for c in den.coeffs])
        self.num, self.den = num, den

    @classmethod
    def const(cls, c: Scalar) -> "RatSeries":
        return cls(Poly.const(c))

    @classmethod
    def x_power(cls, m: int, c: Scalar = 1) -> "RatSeries":
        return cls(Poly.x_power(m, c))

    @classmethod
    def from_poly(cls, p: Poly) -> "RatSeries":
        return cls(p)

    ZERO: "RatSeries"
    ONE: "RatSeries"
    X: "RatSeries"

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == Poly.ONE

    def at_zero(self) -> Scalar:
        """Constant term of the series (den(0) = 1)."""
        return self.num.at_zero()

    def ord(self) -> int:
        """Order of vanishing at x = 0; errors on the zero series."""
        if self.is_zero:
            raise ValueError("zero series has no order of vanishing")
        return self.num.ord()

    # -- field operations --------------------------------------------------

    def __add__(self, other: "RatSeries") -> "RatSeries":
        if not isinstance(other, RatSeries):
            return NotImplemented
        return RatSeries(self.num * other.den + other.num * self.den,
                         self.den * other.den)

    def __neg__(self) -> "RatSeries":
        r = RatSeries.__new__(RatSeries)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatSeries):
            return RatSeries(self.num * other.num, self.den * other.den)
        return RatSeries(self.num.scale(other), self.den)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other: "RatSeries") -> "RatSeries":
        if not isinstance(other, RatSeries):
            return RatSeries(self.num, self.den.scale(other))
        if other.is_zero:
            raise ZeroDivisionError("division by zero series")
        return RatSeries(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RatSeries):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def expand(self, n: int) -> List[Scalar]:
        """First n coefficients of the power-series expansion."""
        out: List[Scalar] = []
        num, den = self.num.coeffs, self.den.coeffs
        for i in range(n):
            acc = num[i] if i < len(num) else 0
            for j in range(1, min(i, len(den) - 1) + 1):
                acc = acc - den[j] * out[i - j]
            out.append(acc)  # den[0] == 1
        return out

    def truncate_poly(self, degree: int) -> Poly:
        """Series truncation through the given degree, as a polynomial."""
        return Poly(self.expand(degree + 1))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatSeries({self})"

    def specialize(self, value: Scalar) -> "RatSeries":
        return RatSeries(self.num.specialize(value), self.den.specialize(value))

    def to_json(self) -> dict:
        return {"num": self.num.as_strings(), "den": self.den.as_strings() or ["1"]}

    @classmethod
    def from_json(cls, obj: dict) -> "RatSeries":
        return cls(Poly.from_strings(obj["num"]),
                   Poly.from_strings(obj.get("den", ["1"])))


RatSeries.ZERO = RatSeries(Poly.ZERO)
RatSeries.ONE = RatSeries(Poly.ONE)
RatSeries.X = RatSeries(Poly.x_power(1))
