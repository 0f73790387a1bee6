"""Integer polynomials, univariate and sparse multivariate.

``IntPoly`` is a dense univariate polynomial over the integers.  It
carries exactly the machinery the constructions need: exact evaluation
at rationals, bisection-based root isolation to a requested interval
width, primitive gcd, square-free part, and a Sturm count used to
certify that an isolating interval really contains a single root.
Root isolation never touches floating point; every interval endpoint
stays a Fraction.

``MultiPoly`` is a sparse multivariate polynomial over the integers,
a dict from exponent tuples to nonzero coefficients.  The determinant
identities are proved by expanding both sides into this ring and
comparing dicts, so the representation is kept canonical at all times
(zero coefficients are dropped on every operation).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Iterator, Sequence

from .numeric import Scalar


class NoSignChange(ValueError):
    """Root isolation was asked to bisect a bracket with equal end signs."""


class ArityMismatch(ValueError):
    """Multivariate operands disagree on the number of variables."""


def _sign(q) -> int:
    return (q > 0) - (q < 0)


class IntPoly:
    """Univariate polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coef: int = 1) -> "IntPoly":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coef])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self._coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self._coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self._coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self._coeffs:
            g = int_gcd(g, abs(c))
        return g

    def primitive(self) -> "IntPoly":
        """Content removed, leading coefficient made positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly([c // g for c in self._coeffs])

    @staticmethod
    def gcd(f: "IntPoly", g: "IntPoly") -> "IntPoly":
        """Primitive gcd with positive leading coefficient."""
        a = [Fraction(c) for c in f._coeffs]
        b = [Fraction(c) for c in g._coeffs]
        while b:
            a, b = b, _frac_mod(a, b)
        if not a:
            return IntPoly()
        den = 1
        for q in a:
            den = den * q.denominator // int_gcd(den, q.denominator)
        return IntPoly([int(q * den) for q in a]).primitive()

    def squarefree_part(self) -> "IntPoly":
        if self.is_zero:
            return self
        g = IntPoly.gcd(self, self.derivative())
        if g.degree <= 0:
            return self.primitive()
        return _frac_div_exact(self, g).primitive()

    def to_json(self) -> list[int]:
        return list(self._coeffs)

    @classmethod
    def from_json(cls, obj: Sequence[int]) -> "IntPoly":
        return cls(obj)


def _frac_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals, coefficient lists low-first."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        while a and a[-1] == 0:
            a.pop()
    return a


def _frac_div_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact quotient f/g; f must be divisible by g."""
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        out[shift] = q
        for i, c in enumerate(b):
            a[i + shift] -= q * c
        while a and a[-1] == 0:
            a.pop()
    if a:
        raise ValueError("inexact polynomial division")
    den = 1
    for q in out:
        den = den * q.denominator // int_gcd(den, q.denominator)
    return IntPoly([int(q * den) for q in out])


def sturm_root_count(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Requires p nonzero at both endpoints; callers hold that by
    construction because their endpoints come from sign-change brackets.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    sf = p.squarefree_part()
    if sf(lo) == 0 or sf(hi) == 0:
        raise ValueError("endpoint is a root; shrink the interval first")
    chain: list[list[Fraction]] = [
        [Fraction(c) for c in sf.coeffs],
        [Fraction(c) for c in sf.derivative().coeffs],
    ]
    while chain[-1]:
        rem = _frac_mod(chain[-2], chain[-1])
        chain.append([-c for c in rem])
    chain.pop()

    def variations(x: Fraction) -> int:
        signs = []
        for cs in chain:
            acc = Fraction(0)
            for c in reversed(cs):
                acc = acc * x + c
            s = _sign(acc)
            if s:
                signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(lo) - variations(hi)


def isolate_root(
    p: IntPoly, lo, hi, width=Fraction(1, 10**12)
) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change bracket around a root of p by bisection.

    Returns (lo, hi) with hi - lo <= width and p(lo)*p(hi) < 0, unless a
    bisection midpoint is an exact root, in which case the degenerate
    interval (root, root) is returned.  Raises NoSignChange when the
    initial bracket has no sign change.
    """
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if lo >= hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    slo, shi = _sign(p(lo)), _sign(p(hi))
    if slo == 0:
        return lo, lo
    if shi == 0:
        return hi, hi
    if slo == shi:
        raise NoSignChange(f"p({lo}) and p({hi}) share sign {slo}")
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sign(p(mid))
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate integer polynomial with a fixed arity.

    Terms live in a dict mapping exponent tuples to nonzero integer
    coefficients, so equality of two expansions is plain dict equality.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise ValueError("arity must be positive")
        self._arity = arity
        tidy: dict[tuple[int, ...], int] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ArityMismatch(
                    f"exponent tuple {exps} in a {arity}-variable polynomial"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coef = int(coef)
            if coef:
                tidy[exps] = tidy.get(exps, 0) + coef
                if not tidy[exps]:
                    del tidy[exps]
        self._terms = tidy

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls(arity)

    @classmethod
    def const(cls, arity: int, c: int) -> "MultiPoly":
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def variable(cls, arity: int, index: int) -> "MultiPoly":
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range")
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coef})

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._terms.items())

    def _check(self, other: "MultiPoly") -> None:
        if self._arity != other._arity:
            raise ArityMismatch(f"{self._arity} variables vs {other._arity}")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self._arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for exps, coef in other._terms.items():
            s = out.get(exps, 0) + coef
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
        p = MultiPoly(self._arity)
        p._terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self._arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = MultiPoly(self._arity)
        p._terms = {e: -c for e, c in self._terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(self._arity)
            p = MultiPoly(self._arity)
            p._terms = {e: c * other for e, c in self._terms.items()}
            return p
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        p = MultiPoly(self._arity)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(self._arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == MultiPoly.const(self._arity, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self):
        return hash((self._arity, frozenset(self._terms.items())))

    def evaluate(self, point: Sequence) -> Scalar:
        """Exact value at a point of Fractions or QuadExt scalars."""
        if len(point) != self._arity:
            raise ArityMismatch(f"point has {len(point)} coordinates")
        cache: list[dict[int, Scalar]] = [{0: Fraction(1)} for _ in point]
        acc: Scalar = Fraction(0)
        for exps, coef in self._terms.items():
            term: Scalar = Fraction(coef)
            for i, e in enumerate(exps):
                powers = cache[i]
                if e not in powers:
                    powers[e] = point[i] ** e
                term = term * powers[e]
            acc = acc + term
        return acc

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded-lexicographic order, highest first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [
            {"exps": list(exps), "coef": str(coef)}
            for exps, coef in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, obj: Sequence[dict], arity: int | None = None) -> "MultiPoly":
        if arity is None:
            if not obj:
                raise ValueError("cannot infer arity of an empty polynomial")
            arity = len(obj[0]["exps"])
        return cls(arity, {tuple(t["exps"]): int(t["coef"]) for t in obj})

    _NAMES = ("x", "y", "z", "t")

    def __repr__(self) -> str:
        if not self._terms:
            return "MultiPoly(0)"
        names = (
            self._NAMES
            if self._arity <= len(self._NAMES)
            else tuple(f"v{i}" for i in range(self._arity))
        )
        parts = []
        for exps, coef in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            if not factors:
                parts.append(str(coef))
            elif coef == 1:
                parts.append("*".join(factors))
            elif coef == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coef}*" + "*".join(factors))
        return "MultiPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"
