"""Exact scalar arithmetic for the package.

Rational numbers are plain ``fractions.Fraction``.  On top of those this
module provides ``QuadExt``, a number a + b*sqrt(d) in a real quadratic
extension of the rationals, with exact arithmetic and exact sign
determination.  That is the full extent of irrationality the probability
tables ever need: a witness either has rational offsets or lives in a
single fixed Q(sqrt(d)), so no general algebraic-number tower is built.

Signs are decided without any floating point.  For a + b*sqrt(d) with a
and b of opposite sign the comparison reduces to a^2 versus d*b^2, which
can never be a tie because d is square-free and at least 2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Union

Scalar = Union[int, Fraction, "QuadExt"]

_PRIMES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class MixedRadicand(ValueError):
    """Arithmetic mixed two quadratic extensions with different radicands."""


def _is_squarefree(n: int) -> bool:
    if n % 4 == 0:
        return False
    for p in _PRIMES_SMALL:
        if n % (p * p) == 0:
            return False
    k = _PRIMES_SMALL[-1]
    while k * k <= n:
        k += 1
        if n % (k * k) == 0:
            return False
    return True


@total_ordering
class QuadExt:
    """a + b*sqrt(d) with a, b rational and d a square-free integer >= 2."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a, b, d: int):
        if not isinstance(d, int) or d < 2:
            raise ValueError(f"radicand must be an integer >= 2, got {d!r}")
        r = isqrt(d)
        if r * r == d:
            raise ValueError(f"radicand must not be a perfect square, got {d}")
        if not _is_squarefree(d):
            raise ValueError(f"radicand must be square-free, got {d}")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self._a

    def conjugate(self) -> "QuadExt":
        return QuadExt(self._a, -self._b, self._d)

    # -- coercion -----------------------------------------------------

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other._d != self._d:
                raise MixedRadicand(
                    f"cannot combine sqrt({self._d}) with sqrt({other._d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self._d)
        return NotImplemented

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self._a + o._a, self._b + o._b, self._d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self._a - o._a, self._b - o._b, self._d)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(o._a - self._a, o._b - self._b, self._d)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(
            self._a * o._a + self._d * self._b * o._b,
            self._a * o._b + self._b * o._a,
            self._d,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def inverse(self) -> "QuadExt":
        # norm a^2 - d b^2 vanishes only at 0 since sqrt(d) is irrational
        n = self._a * self._a - self._d * self._b * self._b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self._d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ----------------------------------------------------

    def sign(self) -> int:
        a, b, d = self._a, self._b, self._d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: |a| vs |b| sqrt(d), squared comparison is exact
        lhs = a * a
        rhs = d * b * b
        if lhs == rhs:
            raise ArithmeticError(f"sqrt({d}) behaved rationally for {self!r}")
        if a > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if self._d != other._d:
                return self._b == 0 and other._b == 0 and self._a == other._a
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * self._d ** 0.5

    def __repr__(self) -> str:
        return f"QuadExt({self._a}, {self._b}, {self._d})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}*sqrt({self._d})"
        op = "+" if self._b > 0 else "-"
        return f"{self._a} {op} {abs(self._b)}*sqrt({self._d})"


def sqrt2() -> QuadExt:
    return QuadExt(0, 1, 2)


def exact_sign(v: Scalar) -> int:
    """Sign of an exact scalar as -1, 0 or 1, decided without floats."""
    if isinstance(v, QuadExt):
        return v.sign()
    return (v > 0) - (v < 0)


def exact_abs(v: Scalar) -> Scalar:
    return -v if exact_sign(v) < 0 else v


def as_exact(v) -> Scalar:
    """Coerce int/str/Fraction/QuadExt to a canonical exact scalar.

    A QuadExt with zero irrational part collapses to its rational value,
    so equality and serialization never depend on how a number was made.
    """
    if isinstance(v, QuadExt):
        return v.a if v.is_rational else v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not an exact scalar: {v!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def scalar_to_json(v: Scalar):
    """Rationals go to "p/q" strings, quadratic irrationals to {a, b, d}."""
    v = as_exact(v)
    if isinstance(v, QuadExt):
        return {
            "a": format_rational(v.a),
            "b": format_rational(v.b),
            "d": v.d,
        }
    return format_rational(v)


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        return as_exact(QuadExt(Fraction(obj["a"]), Fraction(obj["b"]), obj["d"]))
    if isinstance(obj, (str, int)):
        return Fraction(obj)
    raise ValueError(f"not a serialized scalar: {obj!r}")
