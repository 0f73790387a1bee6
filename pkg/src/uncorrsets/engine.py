"""Membership testing, enumeration and verification of uncorrelatedness sets.

For X, Y uniform on a common positive ordered support, E[X^j Y^k] equals
E[X^j] E[Y^k] exactly when

    x1 + A_j x2 + A_k x3 + A_j A_k x4 = 0,

where A_j = (c^j - a^j) / (c^j - b^j) is a strictly decreasing sequence
of rationals larger than 1.  The engine exposes both routes to the same
fact: the moment route multiplies out the joint table, the condition
route evaluates the linear form above.  They are kept independent so one
can audit the other.

An uncorrelatedness set inside a finite box is summarized by a
``SetDescriptor`` (a shape claim such as "the column j = 2" or "the
antidiagonal j + k = 7") together with a certificate level: a
box-verified claim was checked by enumeration only, a global-analytic
claim additionally matches a witness pattern whose full zero set is
known.  ``verify_claim`` re-derives both sides and reports missing and
extra points instead of trusting the claim.

Symmetric supports (-v, 0, v) get their own classification: there A_j
degenerates to 0 for even j and 2 for odd j, the box collapses onto the
four parity classes, and membership is decided by four linear forms in
the offsets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import linalg
from .model import (
    BetaSupport,
    JointTable,
    OffsetVector,
    Support3,
    SupportKind,
    support_from_json,
    to_y,
)
from .numeric import QuadExt, Scalar, as_exact, exact_sign

Point = tuple[int, int]
SupportLike = Union[Support3, BetaSupport]

DEFAULT_MAX_EXP = 64
ENV_MAX_EXP = "UNCORRSET_MAX_EXP"


class ExponentCapExceeded(ValueError):
    """A box or descriptor asked for moments beyond the exponent cap."""


class IncompatibleDescriptor(ValueError):
    """Descriptor kind and support type cannot be combined."""


class LatticeInconsistent(RuntimeError):
    """Parity-class samples disagreed; the classification is unsound."""


def max_exponent() -> int:
    raw = os.environ.get(ENV_MAX_EXP)
    if raw is None:
        return DEFAULT_MAX_EXP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENV_MAX_EXP} must be a positive integer")
    return cap


def _check_box(jmax: int, kmax: int) -> None:
    if jmax < 1 or kmax < 1:
        raise ValueError("box bounds must be at least 1")
    cap = max_exponent()
    if jmax > cap or kmax > cap:
        raise ExponentCapExceeded(
            f"box {jmax}x{kmax} exceeds the exponent cap {cap}"
        )


class ASequence:
    """Cached moment ratios A_j of a positive ordered support.

    Values are exact rationals; every access re-checks strict decrease
    against the cached neighbours, so a corrupted support cannot hand
    out a non-injective sequence silently.
    """

    def __init__(self, support: SupportLike):
        if isinstance(support, BetaSupport):
            self._beta: Fraction | None = support.beta
            self._points = support.to_support3().points
        else:
            if support.kind is not SupportKind.POSITIVE_ORDERED:
                raise ValueError("moment ratios need a positive ordered support")
            self._beta = None
            self._points = support.points
        self._cache: dict[int, Fraction] = {}

    def value(self, j: int) -> Fraction:
        if j < 1:
            raise ValueError("moment order must be >= 1")
        got = self._cache.get(j)
        if got is not None:
            return got
        if self._beta is not None:
            a = 1 + self._beta ** (-j)
        else:
            pa, pb, pc = self._points
            a = (pc**j - pa**j) / (pc**j - pb**j)
        if a <= 1:
            raise ArithmeticError(f"A_{j} = {a} fell to 1 or below")
        lower = [i for i in self._cache if i < j]
        upper = [i for i in self._cache if i > j]
        if lower and not self._cache[max(lower)] > a:
            raise ArithmeticError(f"A_{max(lower)} <= A_{j}: sequence not decreasing")
        if upper and not a > self._cache[min(upper)]:
            raise ArithmeticError(f"A_{j} <= A_{min(upper)}: sequence not decreasing")
        self._cache[j] = a
        return a

    __getitem__ = value


def marginal_moment(support: Support3, j: int) -> Fraction:
    """E[X^j] for X uniform on the support."""
    if j < 0:
        raise ValueError("moment order must be >= 0")
    return Fraction(sum(p**j for p in support.points), 3)


def moment(table: JointTable, j: int, k: int) -> Scalar:
    """E[X^j Y^k] straight from the joint table."""
    sx = table.support_x.points
    sy = table.support_y.points
    acc: Scalar = Fraction(0)
    for r in range(3):
        yk = sy[r] ** k
        for c in range(3):
            acc = acc + table.entries[r][c] * (sx[c] ** j * yk)
    return acc


def is_uncorrelated(table: JointTable, j: int, k: int) -> bool:
    """Moment-route membership test: E[X^j Y^k] == E[X^j] E[Y^k], exactly."""
    lhs = moment(table, j, k)
    rhs = marginal_moment(table.support_x, j) * marginal_moment(table.support_y, k)
    return as_exact(lhs) == as_exact(rhs)


def condition_lhs(x: OffsetVector, seq: ASequence, j: int, k: int) -> Scalar:
    """x1 + A_j x2 + A_k x3 + A_j A_k x4; zero exactly at uncorrelated (j, k)."""
    x1, x2, x3, x4 = x.x
    aj, ak = seq.value(j), seq.value(k)
    return as_exact(x1 + aj * x2 + ak * x3 + aj * ak * x4)


def offsets_delta(
    x: OffsetVector, support_x: Support3, support_y: Support3, j: int, k: int
) -> Scalar:
    """E[X^j Y^k] - E[X^j] E[Y^k] as a bilinear form in the deviations.

    Works for any supports and any scale of x, valid table or not,
    because the uniform 1/9 part cancels from the difference.
    """
    sx, sy = support_x.points, support_y.points
    dev = x.deviations()
    acc: Scalar = Fraction(0)
    for r in range(3):
        yk = sy[r] ** k
        for c in range(3):
            acc = acc + dev[r][c] * (sx[c] ** j * yk)
    return as_exact(acc)


def _as_support3(support: SupportLike) -> Support3:
    return support.to_support3() if isinstance(support, BetaSupport) else support


def enumerate_box_offsets(
    x: OffsetVector, support: SupportLike, jmax: int, kmax: int
) -> list[Point]:
    """All uncorrelated (j, k) with 1 <= j <= jmax, 1 <= k <= kmax.

    Positive ordered supports go through the condition form, everything
    else through the deviation bilinear form; both are exact.
    """
    _check_box(jmax, kmax)
    s3 = _as_support3(support)
    if s3.kind is SupportKind.POSITIVE_ORDERED:
        seq = ASequence(support)
        return [
            (j, k)
            for j in range(1, jmax + 1)
            for k in range(1, kmax + 1)
            if exact_sign(condition_lhs(x, seq, j, k)) == 0
        ]
    return [
        (j, k)
        for j in range(1, jmax + 1)
        for k in range(1, kmax + 1)
        if exact_sign(offsets_delta(x, s3, s3, j, k)) == 0
    ]


def enumerate_box_table(table: JointTable, jmax: int, kmax: int) -> list[Point]:
    """Moment-route enumeration; the slow, assumption-free cross-check."""
    _check_box(jmax, kmax)
    return [
        (j, k)
        for j in range(1, jmax + 1)
        for k in range(1, kmax + 1)
        if is_uncorrelated(table, j, k)
    ]


# ---------------------------------------------------------------------------
# set descriptors

KINDS = (
    "empty",
    "all",
    "finite",
    "vline",
    "hline",
    "cross",
    "diagonal",
    "antidiagonal",
    "slopeline",
    "lattice-union",
)

GLOBAL_ANALYTIC = "global-analytic"
BOX_VERIFIED = "box-verified"

LATTICE_NAMES = ("ee", "eo", "oe", "oo")
# parity classes keyed by (j odd, k odd); ee is even j, even k
_LATTICE_OF_PARITY = {
    (False, False): "ee",
    (False, True): "eo",
    (True, False): "oe",
    (True, True): "oo",
}


@dataclass(frozen=True)
class SetDescriptor:
    """Shape claim about an uncorrelatedness set plus its certificate."""

    kind: str
    certificate: str = BOX_VERIFIED
    points: tuple[Point, ...] = ()
    line_j: int | None = None
    line_k: int | None = None
    diag_sum: int | None = None
    slope: int | None = None
    lattices: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown descriptor kind {self.kind!r}")
        if self.certificate not in (GLOBAL_ANALYTIC, BOX_VERIFIED):
            raise ValueError(f"unknown certificate {self.certificate!r}")
        pts = tuple(sorted((int(j), int(k)) for j, k in self.points))
        if any(j < 1 or k < 1 for j, k in pts):
            raise ValueError("points must have positive coordinates")
        object.__setattr__(self, "points", pts)
        lats = tuple(sorted(set(self.lattices)))
        if any(name not in LATTICE_NAMES for name in lats):
            raise ValueError(f"unknown lattice names in {self.lattices!r}")
        object.__setattr__(self, "lattices", lats)

    # constructors named after the shapes they describe

    @classmethod
    def empty(cls, certificate: str = GLOBAL_ANALYTIC) -> "SetDescriptor":
        return cls("empty", certificate)

    @classmethod
    def all_points(cls, certificate: str = GLOBAL_ANALYTIC) -> "SetDescriptor":
        return cls("all", certificate)

    @classmethod
    def finite(
        cls, points: Iterable[Point], certificate: str = BOX_VERIFIED
    ) -> "SetDescriptor":
        return cls("finite", certificate, points=tuple(points))

    @classmethod
    def vline(cls, j: int, certificate: str = GLOBAL_ANALYTIC) -> "SetDescriptor":
        return cls("vline", certificate, line_j=int(j))

    @classmethod
    def hline(cls, k: int, certificate: str = GLOBAL_ANALYTIC) -> "SetDescriptor":
        return cls("hline", certificate, line_k=int(k))

    @classmethod
    def cross(
        cls, j: int, k: int, certificate: str = GLOBAL_ANALYTIC
    ) -> "SetDescriptor":
        return cls("cross", certificate, line_j=int(j), line_k=int(k))

    @classmethod
    def diagonal(cls, certificate: str = GLOBAL_ANALYTIC) -> "SetDescriptor":
        return cls("diagonal", certificate)

    @classmethod
    def antidiagonal(
        cls, total: int, certificate: str = GLOBAL_ANALYTIC
    ) -> "SetDescriptor":
        if total < 2:
            raise ValueError("antidiagonal needs j + k >= 2")
        return cls("antidiagonal", certificate, diag_sum=int(total))

    @classmethod
    def slopeline(
        cls,
        slope: int,
        extra: Iterable[Point] = (),
        certificate: str = GLOBAL_ANALYTIC,
    ) -> "SetDescriptor":
        if slope < 2:
            raise ValueError("slope must be an integer >= 2")
        pts = [(i, slope * i) for i in (1, 2, 3)]
        pts.extend(extra)
        return cls("slopeline", certificate, points=tuple(pts), slope=int(slope))

    @classmethod
    def lattice_union(
        cls, names: Iterable[str], certificate: str = GLOBAL_ANALYTIC
    ) -> "SetDescriptor":
        names = tuple(names)
        if not names:
            return cls.empty(certificate)
        if sorted(set(names)) == sorted(LATTICE_NAMES):
            return cls.all_points(certificate)
        return cls("lattice-union", certificate, lattices=names)

    def points_in_box(self, jmax: int, kmax: int) -> set[Point]:
        """The claimed set clipped to 1 <= j <= jmax, 1 <= k <= kmax."""
        if self.kind == "empty":
            return set()
        if self.kind == "all":
            return {(j, k) for j in range(1, jmax + 1) for k in range(1, kmax + 1)}
        if self.kind in ("finite", "slopeline"):
            return {
                (j, k) for j, k in self.points if j <= jmax and k <= kmax
            }
        if self.kind == "vline":
            if self.line_j > jmax:
                return set()
            return {(self.line_j, k) for k in range(1, kmax + 1)}
        if self.kind == "hline":
            if self.line_k > kmax:
                return set()
            return {(j, self.line_k) for j in range(1, jmax + 1)}
        if self.kind == "cross":
            out = set()
            if self.line_j <= jmax:
                out.update((self.line_j, k) for k in range(1, kmax + 1))
            if self.line_k <= kmax:
                out.update((j, self.line_k) for j in range(1, jmax + 1))
            return out
        if self.kind == "diagonal":
            return {(i, i) for i in range(1, min(jmax, kmax) + 1)}
        if self.kind == "antidiagonal":
            s = self.diag_sum
            return {(j, s - j) for j in range(max(1, s - kmax), min(jmax, s - 1) + 1)}
        if self.kind == "lattice-union":
            return {
                (j, k)
                for j in range(1, jmax + 1)
                for k in range(1, kmax + 1)
                if _LATTICE_OF_PARITY[(j % 2 == 1, k % 2 == 1)] in self.lattices
            }
        raise AssertionError(f"unhandled kind {self.kind}")

    # -- text and JSON forms -------------------------------------------

    def format_spec(self) -> str:
        if self.kind == "vline":
            return f"vline:{self.line_j}"
        if self.kind == "hline":
            return f"hline:{self.line_k}"
        if self.kind == "cross":
            return f"cross:{self.line_j},{self.line_k}"
        if self.kind == "antidiagonal":
            return f"antidiagonal:{self.diag_sum}"
        if self.kind == "finite":
            return "finite:" + ";".join(f"{j},{k}" for j, k in self.points)
        if self.kind == "slopeline":
            extras = [p for p in self.points if p[1] != self.slope * p[0] or p[0] > 3]
            head = f"slopeline:{self.slope}"
            if extras:
                return head + ";" + ";".join(f"{j},{k}" for j, k in extras)
            return head
        if self.kind == "lattice-union":
            return "lattices:" + ",".join(self.lattices)
        return self.kind

    @classmethod
    def parse(cls, text: str, certificate: str | None = None) -> "SetDescriptor":
        """Parse forms like empty, vline:2, cross:2,3, finite:1,1;2,3."""
        text = text.strip()
        head, _, rest = text.partition(":")
        cert = certificate
        if head == "empty":
            return cls.empty(cert or GLOBAL_ANALYTIC)
        if head == "all":
            return cls.all_points(cert or GLOBAL_ANALYTIC)
        if head == "diagonal":
            return cls.diagonal(cert or GLOBAL_ANALYTIC)
        if head == "vline":
            return cls.vline(int(rest), cert or GLOBAL_ANALYTIC)
        if head == "hline":
            return cls.hline(int(rest), cert or GLOBAL_ANALYTIC)
        if head == "cross":
            j, k = rest.split(",")
            return cls.cross(int(j), int(k), cert or GLOBAL_ANALYTIC)
        if head == "antidiagonal":
            return cls.antidiagonal(int(rest), cert or GLOBAL_ANALYTIC)
        if head == "finite":
            pts = []
            for chunk in rest.split(";"):
                j, k = chunk.split(",")
                pts.append((int(j), int(k)))
            return cls.finite(pts, cert or BOX_VERIFIED)
        if head == "slopeline":
            chunks = rest.split(";")
            slope = int(chunks[0])
            extra = []
            for chunk in chunks[1:]:
                j, k = chunk.split(",")
                extra.append((int(j), int(k)))
            return cls.slopeline(slope, extra, cert or GLOBAL_ANALYTIC)
        if head == "lattices":
            return cls.lattice_union(rest.split(","), cert or GLOBAL_ANALYTIC)
        raise ValueError(f"cannot parse descriptor {text!r}")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "certificate": self.certificate}
        if self.points:
            out["points"] = [list(p) for p in self.points]
        if self.line_j is not None:
            out["j"] = self.line_j
        if self.line_k is not None:
            out["k"] = self.line_k
        if self.diag_sum is not None:
            out["sum"] = self.diag_sum
        if self.slope is not None:
            out["slope"] = self.slope
        if self.lattices:
            out["lattices"] = list(self.lattices)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SetDescriptor":
        return cls(
            obj["kind"],
            obj.get("certificate", BOX_VERIFIED),
            points=tuple(tuple(p) for p in obj.get("points", ())),
            line_j=obj.get("j"),
            line_k=obj.get("k"),
            diag_sum=obj.get("sum"),
            slope=obj.get("slope"),
            lattices=tuple(obj.get("lattices", ())),
        )


# ---------------------------------------------------------------------------
# analytic pattern checks

def _split_sqrt(values: Sequence[Scalar]) -> tuple[list[Fraction], list[Fraction]]:
    """Write each scalar as p + q*sqrt(d) and collect the p and q parts."""
    rat, irr = [], []
    for v in values:
        if isinstance(v, QuadExt):
            rat.append(v.a)
            irr.append(v.b)
        else:
            rat.append(Fraction(v))
            irr.append(Fraction(0))
    return rat, irr


def _analytic_empty(x: OffsetVector) -> bool:
    x1, x2, x3, x4 = x.x
    return (
        exact_sign(x1) != 0
        and all(exact_sign(v) == 0 for v in (x2, x3, x4))
    )


def _analytic_diagonal(x: OffsetVector) -> bool:
    x1, x2, x3, x4 = x.x
    return (
        exact_sign(x1) == 0
        and exact_sign(x4) == 0
        and exact_sign(x2) != 0
        and as_exact(x2 + x3) == 0
    )


def _analytic_vline(x: OffsetVector, seq: ASequence, j0: int) -> bool:
    x1, x2, x3, x4 = x.x
    return (
        exact_sign(x1) == 0
        and exact_sign(x2) == 0
        and exact_sign(x4) != 0
        and as_exact(x3 + seq.value(j0) * x4) == 0
    )


def _analytic_hline(x: OffsetVector, seq: ASequence, k0: int) -> bool:
    x1, x2, x3, x4 = x.x
    return (
        exact_sign(x1) == 0
        and exact_sign(x3) == 0
        and exact_sign(x4) != 0
        and as_exact(x2 + seq.value(k0) * x4) == 0
    )


def _analytic_cross(x: OffsetVector, seq: ASequence, j0: int, k0: int) -> bool:
    x1, x2, x3, x4 = x.x
    aj, ak = seq.value(j0), seq.value(k0)
    return (
        exact_sign(x4) != 0
        and as_exact(x2 + ak * x4) == 0
        and as_exact(x3 + aj * x4) == 0
        and as_exact(x1 - aj * ak * x4) == 0
    )


def _analytic_singleton(x: OffsetVector, seq: ASequence, p: Point) -> bool:
    x1, x2, x3, x4 = x.x
    if exact_sign(x4) != 0 or exact_sign(x2) == 0 or exact_sign(x3) == 0:
        return False
    ratio = as_exact(x2 / x3)
    if not isinstance(ratio, QuadExt):
        return False
    return exact_sign(condition_lhs(x, seq, p[0], p[1])) == 0


def _analytic_two_point(x: OffsetVector, seq: ASequence, pts: Sequence[Point]) -> bool:
    (j1, k1), (j2, k2) = pts
    if j1 == j2 or k1 == k2:
        return False
    rat, irr = _split_sqrt(x.x)
    if all(v == 0 for v in rat) or all(v == 0 for v in irr):
        return False
    if linalg.rank([rat, irr]) != 2:
        return False
    rows = []
    for j, k in pts:
        aj, ak = seq.value(j), seq.value(k)
        rows.append([Fraction(1), aj, ak, aj * ak])
    # the condition rows must be independent and both parts must solve them
    if linalg.rank(rows) != 2:
        return False
    for part in (rat, irr):
        for row in rows:
            if sum(r * v for r, v in zip(row, part)) != 0:
                return False
    return True


def _analytic_antidiagonal(x: OffsetVector, support: SupportLike, m: int) -> bool:
    if not isinstance(support, BetaSupport):
        raise IncompatibleDescriptor(
            "a global antidiagonal claim needs a geometric support"
        )
    y1, y2, y3, y4 = to_y(x).y
    return (
        exact_sign(y2) == 0
        and exact_sign(y3) == 0
        and exact_sign(y4) != 0
        and as_exact(y1 + support.beta**m * y4) == 0
    )


def _analytic_all(x: OffsetVector) -> bool:
    return x.is_zero


def _analytic_lattice_union(
    x: OffsetVector, support: SupportLike, names: Sequence[str]
) -> bool:
    s3 = _as_support3(support)
    if s3.kind is not SupportKind.SYMMETRIC_ZERO:
        raise IncompatibleDescriptor("parity lattices need a symmetric support")
    return set(names) == set(_symmetric_lattices(x))


def _slopeline_polys(m: int):
    from .constructions import slopeline_y_polys

    return slopeline_y_polys(m)


def _analytic_slopeline(x: OffsetVector, support: SupportLike, desc) -> bool:
    if not isinstance(support, BetaSupport):
        raise IncompatibleDescriptor("a global slope-line claim needs a geometric support")
    m = desc.slope
    expected = set(desc.points)
    if expected != {(1, m), (2, 2 * m), (3, 3 * m)}:
        # extra points (the near-line fourth point) are never global claims
        return False
    beta = support.beta
    from .constructions import beta0_poly

    if beta0_poly(m)(beta) < 0:
        return False
    ys = to_y(x).y
    polys = _slopeline_polys(m)
    want = [Fraction(p(beta)) for p in polys]
    have = [as_exact(v) for v in ys]
    for i in range(4):
        for n in range(4):
            # proportional with a nonzero factor: cross products all agree
            if as_exact(have[i] * want[n]) != as_exact(have[n] * want[i]):
                return False
    return any(exact_sign(v) != 0 for v in have)


def check_analytic(
    x: OffsetVector, support: SupportLike, desc: SetDescriptor
) -> bool | None:
    """Does the witness match a pattern whose global zero set is known?

    Returns None when the descriptor only claims box verification, True
    when the global-analytic pattern holds, False when it was claimed
    but does not hold.
    """
    if desc.certificate != GLOBAL_ANALYTIC:
        return None
    kind = desc.kind
    if kind == "empty":
        return _analytic_empty(x)
    if kind == "all":
        return _analytic_all(x)
    if kind == "antidiagonal":
        return _analytic_antidiagonal(x, support, desc.diag_sum)
    if kind == "lattice-union":
        return _analytic_lattice_union(x, support, desc.lattices)
    if kind == "slopeline":
        return _analytic_slopeline(x, support, desc)
    # the remaining shapes rely on A_j being injective, which only the
    # strictly decreasing sequence of a positive ordered support gives
    s3 = _as_support3(support)
    if s3.kind is not SupportKind.POSITIVE_ORDERED:
        raise IncompatibleDescriptor(
            f"a global {kind} claim needs a positive ordered support"
        )
    seq = ASequence(support)
    if kind == "diagonal":
        return _analytic_diagonal(x)
    if kind == "vline":
        return _analytic_vline(x, seq, desc.line_j)
    if kind == "hline":
        return _analytic_hline(x, seq, desc.line_k)
    if kind == "cross":
        return _analytic_cross(x, seq, desc.line_j, desc.line_k)
    if kind == "finite":
        if len(desc.points) == 1:
            return _analytic_singleton(x, seq, desc.points[0])
        if len(desc.points) == 2:
            return _analytic_two_point(x, seq, desc.points)
        return False
    raise AssertionError(f"unhandled kind {kind}")


# ---------------------------------------------------------------------------
# verification reports

MATCH = "match"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class UncorrReport:
    """Outcome of re-deriving a claimed uncorrelatedness set."""

    verdict: str
    claimed: SetDescriptor
    box: tuple[int, int]
    found: tuple[Point, ...]
    missing: tuple[Point, ...]
    extra: tuple[Point, ...]
    analytic_ok: bool | None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "claimed": self.claimed.to_json(),
            "box": list(self.box),
            "found": [list(p) for p in self.found],
            "missing": [list(p) for p in self.missing],
            "extra": [list(p) for p in self.extra],
            "analytic": self.analytic_ok,
        }


def verify_claim(
    x: OffsetVector,
    support: SupportLike,
    desc: SetDescriptor,
    jmax: int,
    kmax: int,
) -> UncorrReport:
    """Enumerate the true set in the box and compare with the claim."""
    found = enumerate_box_offsets(x, support, jmax, kmax)
    predicted = desc.points_in_box(jmax, kmax)
    found_set = set(found)
    missing = tuple(sorted(predicted - found_set))
    extra = tuple(sorted(found_set - predicted))
    analytic = check_analytic(x, support, desc)
    verdict = MATCH if not missing and not extra and analytic is not False else MISMATCH
    return UncorrReport(
        verdict=verdict,
        claimed=desc,
        box=(jmax, kmax),
        found=tuple(found),
        missing=missing,
        extra=extra,
        analytic_ok=analytic,
    )


# ---------------------------------------------------------------------------
# symmetric-support classification

# representative probe plus two consistency samples for each parity class
_LATTICE_PROBES: dict[str, tuple[Point, tuple[Point, Point]]] = {
    "ee": ((2, 2), ((4, 2), (2, 4))),
    "eo": ((2, 1), ((4, 1), (2, 3))),
    "oe": ((1, 2), ((1, 4), (3, 2))),
    "oo": ((1, 1), ((3, 1), (1, 3))),
}


def _symmetric_lattices(x: OffsetVector) -> list[str]:
    """Parity classes on which the condition form vanishes identically.

    On (-v, 0, v) the ratios A_j collapse to 0 (even j) or 2 (odd j), so
    membership of a whole parity class is one linear form in the offsets.
    """
    x1, x2, x3, x4 = x.x
    forms = {
        "ee": x1,
        "eo": x1 + 2 * x3,
        "oe": x1 + 2 * x2,
        "oo": x1 + 2 * x2 + 2 * x3 + 4 * x4,
    }
    return [name for name in LATTICE_NAMES if exact_sign(as_exact(forms[name])) == 0]


def classify_symmetric(table: JointTable) -> SetDescriptor:
    """Classify the uncorrelatedness set of a table on symmetric supports.

    The moment route probes one representative of each parity class and
    cross-checks two more samples per class; the condition route reads
    the four linear forms off the deviations.  Any disagreement raises
    LatticeInconsistent, since both routes are exact.
    """
    sx, sy = table.support_x, table.support_y
    if (
        sx.kind is not SupportKind.SYMMETRIC_ZERO
        or sy.kind is not SupportKind.SYMMETRIC_ZERO
    ):
        raise IncompatibleDescriptor("classification needs symmetric supports")

    by_moments = []
    for name in LATTICE_NAMES:
        rep, samples = _LATTICE_PROBES[name]
        member = is_uncorrelated(table, *rep)
        for s in samples:
            if is_uncorrelated(table, *s) != member:
                raise LatticeInconsistent(
                    f"samples of class {name} disagree with representative {rep}"
                )
        if member:
            by_moments.append(name)

    dev = [[table.entries[r][c] - Fraction(1, 9) for c in range(3)] for r in range(3)]
    x = OffsetVector((dev[1][1], dev[1][0], dev[0][1], dev[0][0]))
    by_forms = _symmetric_lattices(x)
    if by_forms != by_moments:
        raise LatticeInconsistent(
            f"moment probes found {by_moments} but the linear forms say {by_forms}"
        )
    return SetDescriptor.lattice_union(by_moments, GLOBAL_ANALYTIC)


# ---------------------------------------------------------------------------
# structural invariants of uncorrelatedness sets on positive supports

def column_closure_violations(
    points: Iterable[Point], jmax: int, kmax: int
) -> list[str]:
    """Columns or rows with two members that are not fully contained.

    On a positive ordered support, two uncorrelated points in a column
    force the whole column (likewise rows), so any violation means the
    point set cannot be an uncorrelatedness set.
    """
    pts = set(points)
    out = []
    for j in range(1, jmax + 1):
        hits = [k for k in range(1, kmax + 1) if (j, k) in pts]
        if len(hits) >= 2 and len(hits) < kmax:
            out.append(f"column j={j} has {len(hits)} of {kmax} points")
    for k in range(1, kmax + 1):
        hits = [j for j in range(1, jmax + 1) if (j, k) in pts]
        if len(hits) >= 2 and len(hits) < jmax:
            out.append(f"row k={k} has {len(hits)} of {jmax} points")
    return out


def cross_maximality_violations(
    points: Iterable[Point], jmax: int, kmax: int
) -> list[str]:
    """A full cross plus any point off it must already be the whole box."""
    pts = set(points)
    full = jmax * kmax
    if len(pts) == full:
        return []
    out = []
    for j0 in range(1, jmax + 1):
        for k0 in range(1, kmax + 1):
            col = all((j0, k) in pts for k in range(1, kmax + 1))
            row = all((j, k0) in pts for j in range(1, jmax + 1))
            if col and row:
                off = [p for p in pts if p[0] != j0 and p[1] != k0]
                if off:
                    out.append(
                        f"cross at ({j0}, {k0}) plus off-point {off[0]} "
                        f"but only {len(pts)} of {full} points present"
                    )
    return out


# ---------------------------------------------------------------------------
# witness documents

WITNESS_SCHEMA = "uncorrsets/witness"


def witness_to_json(
    x: OffsetVector,
    support: SupportLike,
    desc: SetDescriptor,
    name: str | None = None,
    y=None,
) -> dict:
    out = {
        "schema": WITNESS_SCHEMA,
        "support": support.to_json(),
        "x": x.to_json(),
        "descriptor": desc.to_json(),
    }
    if name:
        out["name"] = name
    if y is not None:
        out["y"] = y.to_json()
    return out


def witness_from_json(obj: dict) -> tuple[OffsetVector, SupportLike, SetDescriptor]:
    if obj.get("schema") != WITNESS_SCHEMA:
        raise ValueError("not a witness document")
    return (
        OffsetVector.from_json(obj["x"]),
        support_from_json(obj["support"]),
        SetDescriptor.from_json(obj["descriptor"]),
    )
