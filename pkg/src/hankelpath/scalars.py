"""Exact scalar arithmetic: rationals and rational functions in the weight t.

Scalars are plain Python ints, fractions.Fraction, or RatFunc (a reduced
rational function in t with rational coefficients).  All three mix freely
under the arithmetic operators; equality is canonical-form equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "RatFunc"]


class ScalarParseError(ValueError):
    pass


def _shrink(c):
    # Fraction with denominator 1 -> int, so integer-only work stays on ints
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


# -- dense polynomial-in-t helpers (lists of int/Fraction, ascending) --------

def _tadd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _trim(out)


def _tneg(a):
    return [-c for c in a]


def _tmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _trim(out)


def _tdivmod(a, b):
    """Field long division in Q[t]; returns (quotient, remainder)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / Fraction(b[-1])
    while len(r) >= len(b):
        coef = _shrink(r[-1] * inv_lead)
        deg = len(r) - len(b)
        q[deg] = coef
        if coef:
            for i, cb in enumerate(b):
                r[deg + i] = r[deg + i] - coef * cb
        r.pop()
        _trim(r)
        if not r:
            break
    return _trim(q), r


def _tgcd(a, b):
    """Monic gcd in Q[t]; gcd with zero is the (monicized) other argument."""
    a, b = list(a), list(b)
    # a nonzero constant divides everything
    while b:
        if len(b) == 1:
            return [1]
        _, a, b = None, b, _tdivmod(a, b)[1]
    if not a:
        return []
    if len(a) == 1:
        return [1]
    lead = Fraction(a[-1])
    return [_shrink(c / lead) for c in a]


class RatFunc:
    """Rational function in t over Q, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        num = _trim([_shrink(Fraction(c) if not isinstance(c, int) else c)
                     for c in num])
        den = _trim([_shrink(Fraction(c) if not isinstance(c, int) else c)
                     for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator in t")
        if not num:
            self.num, self.den = (), (1,)
            return
        if len(den) > 1 or den[0] != 1:
            g = _tgcd(num, den)
            if len(g) > 1:
                num = _tdivmod(num, g)[0]
                den = _tdivmod(den, g)[0]
            lead = Fraction(den[-1])
            if lead != 1:
                num = [_shrink(c / lead) for c in num]
                den = [_shrink(c / lead) for c in den]
        self.num, self.den = tuple(num), tuple(den)

    # -- predicates -----------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.den == (1,)

    @property
    def is_constant(self) -> bool:
        return self.den == (1,) and len(self.num) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant in t")
        return Fraction(self.num[0]) if self.num else Fraction(0)

    def __bool__(self):
        return bool(self.num)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc((other,))
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == (1,) and o.den == (1,):
            return RatFunc(_tadd(self.num, o.num))
        return RatFunc(
            _tadd(_tmul(self.num, o.den), _tmul(o.num, self.den)),
            _tmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = tuple(-c for c in self.num)
        r.den = self.den
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == (1,) and o.den == (1,):
            r = RatFunc.__new__(RatFunc)
            r.num = tuple(_tmul(self.num, o.num))
            r.den = (1,)
            return r
        return RatFunc(_tmul(self.num, o.num), _tmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero scalar")
        if self.den == (1,) and o.den == (1,):
            q, r = _tdivmod(self.num, o.num)
            if not r:
                return RatFunc(q)
        return RatFunc(_tmul(self.num, o.den), _tmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (RatFunc((1,)) / self) ** (-n)
        result = RatFunc((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant:
            return hash(self.as_fraction())
        return hash((self.num, self.den))

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if self.is_polynomial:
            return _tpoly_str(self.num)
        return f"({_tpoly_str(self.num)})/({_tpoly_str(self.den)})"

    def __repr__(self):
        return f"RatFunc({self})"

    def specialize(self, value: Scalar) -> Scalar:
        """Evaluate at t = value (a rational); returns a plain rational."""
        num = _teval(self.num, value)
        den = _teval(self.den, value)
        if not den:
            raise ZeroDivisionError(f"pole of {self} at t={value}")
        q = Fraction(num) / Fraction(den)
        return _shrink(q)


T = RatFunc((0, 1))


def _teval(coeffs, value):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def _tpoly_str(coeffs) -> str:
    if not coeffs:
        return "0"
    parts = []
    for p, c in enumerate(coeffs):
        if not c:
            continue
        if p == 0:
            piece = str(c)
        else:
            var = "t" if p == 1 else f"t^{p}"
            if c == 1:
                piece = var
            elif c == -1:
                piece = f"-{var}"
            else:
                piece = f"{c}*{var}"
        if parts and not piece.startswith("-"):
            parts.append("+")
        parts.append(piece)
    return "".join(parts)


def scalar_str(s: Scalar) -> str:
    return str(s)


def specialize_scalar(s: Scalar, value: Scalar) -> Scalar:
    if isinstance(s, RatFunc):
        return s.specialize(value)
    return s


def scalar_inv(s: Scalar) -> Scalar:
    if isinstance(s, RatFunc):
        return RatFunc((1,)) / s
    if not s:
        raise ZeroDivisionError("inverse of zero")
    return _shrink(Fraction(1) / Fraction(s))


def scalar_div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, RatFunc) or isinstance(b, RatFunc):
        return RatFunc._lift(a) / RatFunc._lift(b)
    if not b:
        raise ZeroDivisionError("division by zero scalar")
    return _shrink(Fraction(a) / Fraction(b))


# -- parsing -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|t|[()+\-*/^])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ScalarParseError(f"bad scalar syntax near {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> RatFunc:
        tok = self.peek()
        if tok in ("+", "-"):
            self.take()
            value = self.factor()
            return value if tok == "+" else -value
        value = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ScalarParseError("exponent must be an integer")
            value = value ** (sign * int(tok))
        return value

    def atom(self) -> RatFunc:
        tok = self.take()
        if tok is None:
            raise ScalarParseError("unexpected end of scalar expression")
        if tok.isdigit():
            return RatFunc((int(tok),))
        if tok == "t":
            return RatFunc((0, 1))
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ScalarParseError("unbalanced parentheses")
            return value
        raise ScalarParseError(f"unexpected token {tok!r}")


def scalar_parse(text: str) -> Scalar:
    """Parse the scalar grammar: `-12`, `3/4`, `1+t`, `(1+t)/(1-t)` ..."""
    tokens = _tokenize(text)
    if not tokens:
        raise ScalarParseError("empty scalar")
    parser = _Parser(tokens)
    value = parser.expr()
    if parser.peek() is not None:
        raise ScalarParseError(f"trailing input in scalar {text!r}")
    if value.is_constant:
        return _shrink(value.as_fraction())
    return value
