"""Witnesses realizing each achievable uncorrelatedness-set shape.

Every constructor returns offsets whose zero set is known in closed
form, so the engine's pattern checks can certify the claim globally:

* empty set, full set, main diagonal, columns, rows, crosses;
* one prescribed point, via an offset in Q(sqrt(2)) whose zero line has
  irrational slope and therefore meets the rational condition lattice
  in exactly one point;
* two prescribed points in general position, via a sqrt(2)-combination
  of a rational nullspace basis of the two membership conditions;
* antidiagonals j + k = m on geometric supports;
* three collinear points (1, m), (2, 2m), (3, 3m) on geometric supports
  with ratio at or above a threshold root beta0(m), plus a near-line
  variant that picks up a fourth point (4, k) at an algebraic ratio
  beta_star(m, k).

beta0(m) is the unique root in (1, 2) of B^(m+1) - B^2 - B - 1, and
beta_star(m, k) the root in (1, beta0) of

    P(B) = (B^(m+1) - B^2 - B - 1) B^k + (B^(m+2) + B^(m+1) + B^m - B) B^(2m).

beta_star is irrational, so the fourth-point construction cannot hand
out a rational support; instead ``AlgebraicSlopeLine`` keeps P together
with a certified isolating interval and decides membership of (j, k)
exactly, through the gcd of P with the corresponding difference
polynomial D(j, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import (
    ASequence,
    BOX_VERIFIED,
    GLOBAL_ANALYTIC,
    Point,
    SetDescriptor,
    SupportLike,
    _check_box,
)
from . import linalg
from .model import (
    BetaSupport,
    OffsetVector,
    Support3,
    YVector,
    from_y,
)
from .numeric import QuadExt, format_rational, parse_rational
from .polynomials import IntPoly, isolate_root, sturm_root_count


class DegenerateSystem(RuntimeError):
    """A membership system lost rank; valid supports cannot do that."""


class BetaTooSmall(ValueError):
    """The requested ratio is below the threshold root beta0(m)."""


class BracketNotFound(ValueError):
    """No sign-change bracket for the near-line root could be located."""


DEFAULT_WIDTH = Fraction(1, 10**12)

MODE_AT_OR_ABOVE = "at-or-above-beta0"
MODE_BETA_STAR = "beta-star"


@dataclass(frozen=True)
class Construction:
    """A witness bundled with its support and certified shape claim."""

    name: str
    descriptor: SetDescriptor
    support: SupportLike | None = None
    x: OffsetVector | None = None
    y: YVector | None = None
    algebraic: "AlgebraicSlopeLine | None" = None

    def to_json(self) -> dict:
        out: dict = {
            "schema": "uncorrsets/witness",
            "name": self.name,
            "descriptor": self.descriptor.to_json(),
        }
        if self.support is not None:
            out["support"] = self.support.to_json()
        if self.x is not None:
            out["x"] = self.x.to_json()
        if self.y is not None:
            out["y"] = self.y.to_json()
        if self.algebraic is not None:
            out["algebraic"] = self.algebraic.to_json()
        return out


# ---------------------------------------------------------------------------
# elementary witnesses


def empty_witness() -> OffsetVector:
    """lhs = x1 never vanishes, so nothing is uncorrelated."""
    return OffsetVector.of(1, 0, 0, 0)


def full_witness() -> OffsetVector:
    """Zero offsets mean independence: everything is uncorrelated."""
    return OffsetVector.of(0, 0, 0, 0)


def diagonal_witness() -> OffsetVector:
    """lhs = A_j - A_k vanishes exactly on j = k by strict monotonicity."""
    return OffsetVector.of(0, 1, -1, 0)


def vline_witness(seq: ASequence, j: int) -> OffsetVector:
    """lhs = A_k (A_j' - A_j) at order (j', k): the column j' = j."""
    return OffsetVector.of(0, 0, -seq.value(j), 1)


def hline_witness(seq: ASequence, k: int) -> OffsetVector:
    """lhs = A_j (A_k' - A_k): the row k' = k."""
    return OffsetVector.of(0, -seq.value(k), 0, 1)


def cross_witness(seq: ASequence, j: int, k: int) -> OffsetVector:
    """lhs = (A_j' - A_j)(A_k' - A_k): the union of a column and a row."""
    aj, ak = seq.value(j), seq.value(k)
    return OffsetVector.of(aj * ak, -ak, -aj, 1)


def singleton_witness(seq: ASequence, j0: int, k0: int) -> OffsetVector:
    """lhs = (A_j0 - A_j) + sqrt(2) (A_k0 - A_k).

    Both parts are rational, so the sum vanishes only when both do,
    which pins down (j, k) = (j0, k0) by injectivity of the ratios.
    """
    aj, ak = seq.value(j0), seq.value(k0)
    return OffsetVector.of(QuadExt(aj, ak, 2), -1, QuadExt(0, -1, 2), 0)


def two_point_witness(seq: ASequence, p1: Point, p2: Point) -> OffsetVector:
    """Offsets whose zero set is exactly {p1, p2}.

    The two membership conditions span a rank-2 system; any rational
    basis v1, v2 of its nullspace gives the witness v1 + sqrt(2) v2.
    An order (j, k) then satisfies the condition only if its row
    (1, A_j, A_k, A_j A_k) lies in the span of the rows of p1 and p2,
    which collinearity of the bilinear pattern forbids except at the
    two points themselves.  Needs distinct rows and distinct columns;
    a shared line would force that whole line in.
    """
    (j1, k1), (j2, k2) = p1, p2
    if p1 == p2:
        raise ValueError("two-point witness needs two distinct points")
    if j1 == j2 or k1 == k2:
        raise ValueError(
            "points share a row or column; that forces the whole line, "
            "use a line witness instead"
        )
    rows = []
    for j, k in (p1, p2):
        aj, ak = seq.value(j), seq.value(k)
        rows.append([Fraction(1), aj, ak, aj * ak])
    basis = linalg.nullspace(rows)
    if len(basis) != 2:
        raise DegenerateSystem(
            f"membership system of {p1}, {p2} has nullity {len(basis)}, not 2"
        )
    v1, v2 = basis
    return OffsetVector(tuple(QuadExt(a, b, 2) for a, b in zip(v1, v2)))


def antidiagonal_witness(support: BetaSupport, m: int) -> YVector:
    """y = (beta^m, 0, 0, -1): the power sum is beta^m - beta^(j+k)."""
    if m < 2:
        raise ValueError("antidiagonal j + k = m needs m >= 2")
    return YVector.of(support.beta**m, 0, 0, -1)


# ---------------------------------------------------------------------------
# threshold and near-line roots


def beta0_poly(m: int) -> IntPoly:
    """B^(m+1) - B^2 - B - 1, strictly increasing on [1, oo) for m >= 2."""
    if m < 2:
        raise ValueError("slope must be an integer >= 2")
    p = IntPoly.monomial(m + 1)
    return p + IntPoly([-1, -1, -1])


def beta0(m: int, width=Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """Isolating interval for the threshold root beta0(m) in (1, 2)."""
    return isolate_root(beta0_poly(m), 1, 2, width)


def beta_star_poly(m: int, k: int) -> IntPoly:
    """P(B) whose root in (1, beta0) realizes the fourth point (4, k)."""
    if m < 2:
        raise ValueError("slope must be an integer >= 2")
    if k <= 4 * m:
        raise ValueError(
            f"fourth-point column must exceed 4m = {4 * m}; P only dips "
            "below zero when its slope at 1 is negative"
        )
    growth = IntPoly.monomial(m + 2) + IntPoly.monomial(m + 1) + IntPoly.monomial(m)
    growth = growth + IntPoly([0, -1])
    return beta0_poly(m) * IntPoly.monomial(k) + growth * IntPoly.monomial(2 * m)


def beta_star(m: int, k: int, width=DEFAULT_WIDTH) -> tuple[Fraction, Fraction]:
    """Isolating interval for the near-line root, kept inside (1, beta0).

    P vanishes at 1 and tends positive before beta0, so a bracket is
    found by walking 1 + 2^-i until P goes negative; the interval is
    then bisected until it is narrow enough and its upper end provably
    sits below beta0 (checked through the sign of the threshold
    polynomial, no root comparison needed).
    """
    p = beta_star_poly(m, k)
    threshold = beta0_poly(m)
    _, hi0 = beta0(m, Fraction(1, 2**20))
    lo = None
    step = Fraction(1, 2)
    for _ in range(64):
        candidate = 1 + step
        if candidate < hi0 and p(candidate) < 0:
            lo = candidate
            break
        step /= 2
    if lo is None:
        raise BracketNotFound(
            f"P stayed nonnegative on 1 + 2^-i for i <= 64 with m={m}, k={k}"
        )
    hi = hi0
    if p(hi) <= 0:
        raise BracketNotFound(f"P({hi}) <= 0; no sign change before beta0")
    width = Fraction(width)
    while hi - lo > width or threshold(hi) >= 0:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            # integer polynomials only have integer rational roots, and
            # there are none in (1, 2); guard anyway
            lo = hi = mid
            break
        if v < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def slopeline_y_polys(m: int) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
    """Power-sum coordinates of the slope-line witness, as polynomials in B.

    y1 = (B^m - B) B^(2m+2),  y2 = (1 - B^(m+1)) B^(2m),
    y3 = (B^(m+1) - 1) B^2,   y4 = B - B^m.
    """
    if m < 2:
        raise ValueError("slope must be an integer >= 2")
    y1 = IntPoly.monomial(3 * m + 2) - IntPoly.monomial(2 * m + 3)
    y2 = IntPoly.monomial(2 * m) - IntPoly.monomial(3 * m + 1)
    y3 = IntPoly.monomial(m + 3) - IntPoly.monomial(2)
    y4 = IntPoly.monomial(1) - IntPoly.monomial(m)
    return y1, y2, y3, y4


def slopeline_d_poly(m: int, j: int, k: int) -> IntPoly:
    """D(j, k) in B: the power sum of the slope-line witness at (j, k).

    D(j,k) = (B^m - B)(B^(2m+2) - B^(j+k)) + (B^(m+1) - 1)(B^(k+2) - B^(j+2m)).
    Vanishing of D at the support ratio is exactly membership of (j, k).
    """
    if m < 2:
        raise ValueError("slope must be an integer >= 2")
    if j < 1 or k < 1:
        raise ValueError("orders must be >= 1")
    t1 = IntPoly.monomial(m) - IntPoly.monomial(1)
    t2 = IntPoly.monomial(2 * m + 2) - IntPoly.monomial(j + k)
    t3 = IntPoly.monomial(m + 1) - IntPoly([1])
    t4 = IntPoly.monomial(k + 2) - IntPoly.monomial(j + 2 * m)
    return t1 * t2 + t3 * t4


@dataclass(frozen=True)
class SlopeLineParams:
    """How to realize three (or four) points on the line k = m j.

    mode "at-or-above-beta0" takes a rational beta with beta >= beta0(m)
    and yields exactly {(1, m), (2, 2m), (3, 3m)}, globally.  mode
    "beta-star" takes the extra column k > 4m and realizes the ratio as
    the algebraic root beta_star(m, k), adding the near-line point (4, k).
    """

    m: int
    mode: str
    beta: Fraction | None = None
    k: int | None = None
    width: Fraction = DEFAULT_WIDTH

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("slope must be an integer >= 2")
        if self.mode not in (MODE_AT_OR_ABOVE, MODE_BETA_STAR):
            raise ValueError(f"unknown slope-line mode {self.mode!r}")
        if self.mode == MODE_AT_OR_ABOVE:
            if self.beta is None:
                raise ValueError("at-or-above mode needs a rational beta")
            object.__setattr__(self, "beta", Fraction(self.beta))
        else:
            if self.k is None:
                raise ValueError("beta-star mode needs the fourth-point column k")
        object.__setattr__(self, "width", Fraction(self.width))


@dataclass(frozen=True)
class AlgebraicSlopeLine:
    """A slope-line construction at the algebraic ratio beta_star(m, k).

    Membership of an order pair (j, kk) is decided exactly: beta_star
    is the only root of ``poly`` in ``interval`` (Sturm-certified), so
    (j, kk) is uncorrelated iff gcd(D(j, kk), poly) still has a root
    there.  No floating point, no numeric thresholds.
    """

    m: int
    k: int
    poly: IntPoly
    interval: tuple[Fraction, Fraction]

    def contains(self, j: int, kk: int) -> bool:
        d = slopeline_d_poly(self.m, j, kk)
        if d.is_zero:
            return True
        g = IntPoly.gcd(d, self.poly)
        if g.degree <= 0:
            return False
        return sturm_root_count(g, self.interval[0], self.interval[1]) >= 1

    def enumerate_box(self, jmax: int, kmax: int) -> list[Point]:
        _check_box(jmax, kmax)
        return [
            (j, kk)
            for j in range(1, jmax + 1)
            for kk in range(1, kmax + 1)
            if self.contains(j, kk)
        ]

    def descriptor(self) -> SetDescriptor:
        return SetDescriptor.slopeline(
            self.m, extra=((4, self.k),), certificate=BOX_VERIFIED
        )

    def y_polys(self) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
        return slopeline_y_polys(self.m)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "poly": self.poly.to_json(),
            "interval": [format_rational(q) for q in self.interval],
            "y_polys": [p.to_json() for p in self.y_polys()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraicSlopeLine":
        return cls(
            m=obj["m"],
            k=obj["k"],
            poly=IntPoly.from_json(obj["poly"]),
            interval=(
                parse_rational(obj["interval"][0]),
                parse_rational(obj["interval"][1]),
            ),
        )


def slopeline_beta_star(m: int, k: int, width=DEFAULT_WIDTH) -> AlgebraicSlopeLine:
    """Isolate beta_star(m, k) and certify the interval holds one root."""
    p = beta_star_poly(m, k)
    lo, hi = beta_star(m, k, width)
    while sturm_root_count(p, lo, hi) != 1:
        third = (hi - lo) / 4
        lo2, hi2 = beta_star(m, k, third)
        if (lo2, hi2) == (lo, hi):
            raise BracketNotFound(
                f"could not certify a single root of P in ({lo}, {hi})"
            )
        lo, hi = lo2, hi2
    return AlgebraicSlopeLine(m=m, k=k, poly=p, interval=(lo, hi))


# ---------------------------------------------------------------------------
# bundled constructions


def make_empty(support: SupportLike) -> Construction:
    x = empty_witness()
    return Construction("empty", SetDescriptor.empty(), support, x)


def make_full(support: SupportLike) -> Construction:
    x = full_witness()
    return Construction("all", SetDescriptor.all_points(), support, x)


def make_diagonal(support: SupportLike) -> Construction:
    x = diagonal_witness()
    return Construction("diagonal", SetDescriptor.diagonal(), support, x)


def make_vline(support: SupportLike, j: int) -> Construction:
    x = vline_witness(ASequence(support), j)
    return Construction("vline", SetDescriptor.vline(j), support, x)


def make_hline(support: SupportLike, k: int) -> Construction:
    x = hline_witness(ASequence(support), k)
    return Construction("hline", SetDescriptor.hline(k), support, x)


def make_cross(support: SupportLike, j: int, k: int) -> Construction:
    x = cross_witness(ASequence(support), j, k)
    return Construction("cross", SetDescriptor.cross(j, k), support, x)


def make_singleton(support: SupportLike, j0: int, k0: int) -> Construction:
    x = singleton_witness(ASequence(support), j0, k0)
    desc = SetDescriptor.finite([(j0, k0)], GLOBAL_ANALYTIC)
    return Construction("singleton", desc, support, x)


def make_two_point(support: SupportLike, p1: Point, p2: Point) -> Construction:
    x = two_point_witness(ASequence(support), p1, p2)
    desc = SetDescriptor.finite([p1, p2], GLOBAL_ANALYTIC)
    return Construction("two-point", desc, support, x)


def make_antidiagonal(support: BetaSupport, m: int) -> Construction:
    y = antidiagonal_witness(support, m)
    return Construction(
        "antidiagonal", SetDescriptor.antidiagonal(m), support, from_y(y), y
    )


def make_lattice_union(alpha, names) -> Construction:
    """Offsets on (-alpha, 0, alpha) vanishing on exactly the named classes.

    The four parity-class forms are an invertible linear image of the
    offsets, so target values (0 on wanted classes, 1 elsewhere) pin the
    witness down uniquely.
    """
    support = Support3.symmetric(alpha)
    names = tuple(names)
    desc = SetDescriptor.lattice_union(names, GLOBAL_ANALYTIC)
    want = {lat: Fraction(0 if lat in names else 1) for lat in ("ee", "eo", "oe", "oo")}
    x1 = want["ee"]
    x3 = (want["eo"] - want["ee"]) / 2
    x2 = (want["oe"] - want["ee"]) / 2
    x4 = (want["oo"] - want["oe"] - want["eo"] + want["ee"]) / 4
    return Construction("lattice-union", desc, support, OffsetVector.of(x1, x2, x3, x4))


def make_slopeline(params: SlopeLineParams) -> Construction:
    if params.mode == MODE_AT_OR_ABOVE:
        beta = params.beta
        if beta0_poly(params.m)(beta) < 0:
            lo, hi = beta0(params.m, Fraction(1, 10**6))
            raise BetaTooSmall(
                f"beta = {beta} lies below the threshold root in ({lo}, {hi})"
            )
        support = BetaSupport(Fraction(1), beta)
        ys = tuple(Fraction(p(beta)) for p in slopeline_y_polys(params.m))
        y = YVector(ys)
        return Construction(
            "slopeline",
            SetDescriptor.slopeline(params.m, certificate=GLOBAL_ANALYTIC),
            support,
            from_y(y),
            y,
        )
    line = slopeline_beta_star(params.m, params.k, params.width)
    return Construction(
        "slopeline", line.descriptor(), support=None, x=None, y=None, algebraic=line
    )
