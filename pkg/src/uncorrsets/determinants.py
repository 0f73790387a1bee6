"""Vandermonde-type determinants whose cofactors are power sums.

sigma_k(x, y) = x^k + x^(k-1) y + ... + y^k is the complete homogeneous
power sum in two variables.  Two 4x4 determinant families built from
rows of powers of distinct points factor over the classical Vandermonde
product with an explicitly positive cofactor:

* F(m, n) = det with columns (1, v, v^m, v^n), 2 <= m < n;
* G(m, n) = det with columns (1, v^m, v^n, v^(m+n)), 1 <= m < n.

Both closed forms below are multisums of monomials times sigma terms
with nonnegative coefficients, so at increasing positive arguments the
determinants are strictly positive.  That positivity is what makes four
collinear order pairs on k = (b/a) j with a != b an independent system:
the membership matrix of such points is exactly a G(a, b) matrix at
rational powers of the support ratio.

Every identity is checked two independent ways: ``*_direct`` expands the
determinant by cofactors, ``*_closed`` expands the product formula, and
the results are compared coefficient by coefficient (and again at random
points in the tests).  The two routes share only the polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .engine import Point
from .model import BetaSupport
from .numeric import format_rational
from .polynomials import MultiPoly

# variable order throughout: x, y, z, t
X, Y, Z, T = range(4)


class NotOnLine(ValueError):
    """The four order pairs do not sit on a common line through 0."""


class SlopeOne(ValueError):
    """Slope 1 makes the middle columns coincide; the system degenerates."""


def sigma(k: int, arity: int = 2, i: int = 0, j: int = 1) -> MultiPoly:
    """sigma_k in variables i and j of an arity-wide ring."""
    if k < 0:
        raise ValueError("sigma needs k >= 0")
    terms = {}
    for r in range(k + 1):
        exps = [0] * arity
        exps[i] = k - r
        exps[j] = r
        terms[tuple(exps)] = 1
    return MultiPoly(arity, terms)


def power_diff(k: int, arity: int, i: int, j: int) -> MultiPoly:
    """v_i^k - v_j^k, the telescoping partner of sigma_(k-1)."""
    return MultiPoly.variable(arity, i) ** k - MultiPoly.variable(arity, j) ** k


def sigma_diff_identity(k: int) -> bool:
    """sigma_k(x,y) - sigma_k(x,z) == (y - z) * sum_j x^(k-1-j) sigma_j(y,z)."""
    if k < 1:
        raise ValueError("the difference identity needs k >= 1")
    lhs = sigma(k, 3, X, Y) - sigma(k, 3, X, Z)
    x = MultiPoly.variable(3, X)
    acc = MultiPoly.zero(3)
    for j in range(k):
        acc = acc + x ** (k - 1 - j) * sigma(j, 3, Y, Z)
    rhs = (MultiPoly.variable(3, Y) - MultiPoly.variable(3, Z)) * acc
    return lhs == rhs


def mp_det(mat: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion of a small matrix of polynomials."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix must be square")
    if n == 1:
        return mat[0][0]
    arity = mat[0][0].arity
    out = MultiPoly.zero(arity)
    for c in range(n):
        entry = mat[0][c]
        if entry.is_zero:
            continue
        minor = [
            [row[cc] for cc in range(n) if cc != c] for row in mat[1:]
        ]
        cof = entry * mp_det(minor)
        out = out + (cof if c % 2 == 0 else -cof)
    return out


@dataclass(frozen=True)
class DetResult:
    """Both routes to one determinant, compared symbolically."""

    kind: str
    m: int
    n: int
    direct: MultiPoly
    closed: MultiPoly
    equal: bool

    def to_json(self, summary: bool = False) -> dict:
        out: dict = {"kind": self.kind, "m": self.m, "n": self.n, "equal": self.equal}
        if summary:
            out["term_counts"] = {
                "direct": self.direct.term_count,
                "closed": self.closed.term_count,
            }
        else:
            out["direct"] = self.direct.to_json()
            out["closed"] = self.closed.to_json()
        return out


def det2_direct(j: int, m: int) -> MultiPoly:
    """sigma_j(x,y) sigma_m(x,z) - sigma_j(x,z) sigma_m(x,y)."""
    if j < 0 or m < 0:
        raise ValueError("orders must be >= 0")
    return sigma(j, 3, X, Y) * sigma(m, 3, X, Z) - sigma(j, 3, X, Z) * sigma(
        m, 3, X, Y
    )


def det2_closed(j: int, m: int) -> MultiPoly:
    """(z - y) times a double sum with nonnegative coefficients, j <= m."""
    if j < 0 or m < 0:
        raise ValueError("orders must be >= 0")
    if j > m:
        return -det2_closed(m, j)
    x = MultiPoly.variable(3, X)
    y = MultiPoly.variable(3, Y)
    z = MultiPoly.variable(3, Z)
    acc = MultiPoly.zero(3)
    for r in range(j + 1):
        for s in range(j + 1, m + 1):
            acc = acc + x ** (j + m - r - s) * y**r * z**r * sigma(s - r - 1, 3, Y, Z)
    return (z - y) * acc


def det2_check(j: int, m: int) -> DetResult:
    direct = det2_direct(j, m)
    closed = det2_closed(j, m)
    return DetResult("det2", j, m, direct, closed, direct == closed)


def vandermonde_factor() -> MultiPoly:
    """(y-x)(z-x)(t-x)(z-y)(t-y)(t-z) in the four-variable ring."""
    vs = [MultiPoly.variable(4, i) for i in range(4)]
    out = MultiPoly.const(4, 1)
    for a in range(4):
        for b in range(a + 1, 4):
            out = out * (vs[b] - vs[a])
    return out


def _power_matrix(exponents: Sequence[int]) -> list[list[MultiPoly]]:
    vs = [MultiPoly.variable(4, i) for i in range(4)]
    return [[v**e for e in exponents] for v in vs]


def f_direct(m: int, n: int) -> MultiPoly:
    """det of the matrix with columns (1, v, v^m, v^n) at v = x, y, z, t."""
    _check_orders(m, n, lowest=1)
    return mp_det(_power_matrix((0, 1, m, n)))


def f_closed(m: int, n: int) -> MultiPoly:
    """Vandermonde product times the quadruple-sum cofactor of F(m, n).

    Empty index ranges (m < 2 or n = m) make the cofactor vanish, in
    step with the repeated-column determinant on the direct route.
    """
    _check_orders(m, n, lowest=1)
    x = MultiPoly.variable(4, X)
    y = MultiPoly.variable(4, Y)
    z = MultiPoly.variable(4, Z)
    t = MultiPoly.variable(4, T)
    acc = MultiPoly.zero(4)
    for j in range(m - 1):
        for k in range(n - m):
            for r in range(j + 1):
                for s in range(j + 1, m + k):
                    acc = acc + (
                        x ** (n - 3 - j - k)
                        * y ** (m + j + k - r - s - 1)
                        * z**r
                        * t**r
                        * sigma(s - r - 1, 4, Z, T)
                    )
    return vandermonde_factor() * acc


def g_direct(m: int, n: int) -> MultiPoly:
    """det of the matrix with columns (1, v^m, v^n, v^(m+n))."""
    _check_orders(m, n, lowest=1)
    return mp_det(_power_matrix((0, m, n, m + n)))


def g_closed(m: int, n: int) -> MultiPoly:
    """Vandermonde product times the quintuple-sum cofactor of G(m, n)."""
    _check_orders(m, n, lowest=1)
    x = MultiPoly.variable(4, X)
    y = MultiPoly.variable(4, Y)
    z = MultiPoly.variable(4, Z)
    t = MultiPoly.variable(4, T)
    acc = MultiPoly.zero(4)
    for k in range(m, n):
        for j in range(m):
            for p in range(m):
                for s in range(k - p, n):
                    for r in range(k - j):
                        acc = acc + (
                            x ** (2 * m + n - 3 - k - p - j)
                            * y ** (n + k - 2 - r - s)
                            * z ** (j + r)
                            * t ** (j + r)
                            * sigma(p + s - j - r - 1, 4, Z, T)
                        )
    return vandermonde_factor() * acc


def _check_orders(m: int, n: int, lowest: int) -> None:
    if m < lowest or n < m:
        raise ValueError(f"orders must satisfy {lowest} <= m <= n, got {m}, {n}")


def f_check(m: int, n: int) -> DetResult:
    direct = f_direct(m, n)
    closed = f_closed(m, n)
    return DetResult("f", m, n, direct, closed, direct == closed)


def g_check(m: int, n: int) -> DetResult:
    direct = g_direct(m, n)
    closed = g_closed(m, n)
    return DetResult("g", m, n, direct, closed, direct == closed)


# ---------------------------------------------------------------------------
# independence of four collinear order pairs


@dataclass(frozen=True)
class IndependenceCertificate:
    """Why four membership conditions admit only the zero offset.

    The matrix rows are (1, beta^j, beta^k, beta^(j+k)) for each order
    pair; ``det_value`` is its exact determinant and ``closed_value``
    the G(a, b) product formula evaluated at u_i = beta^(j_i / a), equal
    up to the recorded column-swap sign.  The product formula is a
    strictly positive quantity at increasing positive arguments, which
    is the actual proof that the determinant cannot vanish.
    """

    points: tuple[Point, ...]
    slope: Fraction
    det_value: Fraction
    nullspace_dim: int
    closed_value: Fraction
    sign: int
    cross_checked: bool
    independent: bool

    def to_json(self) -> dict:
        return {
            "points": [list(p) for p in self.points],
            "slope": format_rational(self.slope),
            "det": format_rational(self.det_value),
            "nullspace_dim": self.nullspace_dim,
            "closed_value": format_rational(self.closed_value),
            "sign": self.sign,
            "cross_checked": self.cross_checked,
            "independent": self.independent,
        }


def independence_certificate(
    points: Sequence[Point], support: BetaSupport
) -> IndependenceCertificate:
    """Certify that four collinear order pairs force independence.

    The pairs must lie on a line k = (b/a) j through the origin with
    b/a != 1 in lowest terms; then a divides every j and the membership
    matrix is a G(min(a,b), max(a,b)) power matrix at the rational
    points beta^(j_i/a), so its determinant is (up to a column swap)
    the manifestly positive closed form.
    """
    pts = sorted({(int(j), int(k)) for j, k in points})
    if len(pts) != 4:
        raise ValueError(f"need four distinct order pairs, got {len(pts)}")
    if any(j < 1 or k < 1 for j, k in pts):
        raise ValueError("orders must be >= 1")
    slope = Fraction(pts[0][1], pts[0][0])
    for j, k in pts:
        if Fraction(k, j) != slope:
            raise NotOnLine(f"({j}, {k}) is not on k = {slope} j")
    if slope == 1:
        raise SlopeOne("slope 1 duplicates the two middle columns")

    beta = support.beta
    rows = []
    for j, k in pts:
        bj, bk = beta**j, beta**k
        rows.append([Fraction(1), bj, bk, bj * bk])
    det_value = linalg.det(rows)
    null_dim = len(linalg.nullspace(rows))

    a, b = slope.denominator, slope.numerator
    for j, _ in pts:
        if j % a != 0:
            raise NotOnLine(f"j = {j} is not a multiple of {a}")
    u = [beta ** (j // a) for j, _ in pts]
    if b > a:
        closed = g_closed(a, b)
        sign = 1
    else:
        # columns (1, u^a, u^b, u^(a+b)) swap the middle pair of G(b, a)
        closed = g_closed(b, a)
        sign = -1
    closed_value = Fraction(closed.evaluate(u))
    cross_checked = det_value == sign * closed_value
    independent = det_value != 0 and null_dim == 0 and closed_value > 0
    return IndependenceCertificate(
        points=tuple(pts),
        slope=slope,
        det_value=det_value,
        nullspace_dim=null_dim,
        closed_value=closed_value,
        sign=sign,
        cross_checked=cross_checked,
        independent=independent,
    )
