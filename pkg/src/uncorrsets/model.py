"""Three-point uniform supports and offset-parametrized joint tables.

A pair (X, Y) of random variables, each uniform on a three-point support,
has its joint pmf written as 1/9 plus a 3x3 table of deviations.  Uniform
marginals force every row and column of the deviation table to sum to
zero, which leaves four free offsets x1..x4 placed like this (rows are
Y = a, b, c; columns are X = a, b, c):

        x4          x3          -x3-x4
        x2          x1          -x1-x2
        -x2-x4      -x1-x3      x1+x2+x3+x4

Offsets may be rational or quadratic irrationals; probabilities must be
nonnegative, which ``rescale`` arranges by shrinking any offset vector
to the canonical scale 1/(18M) where M is the largest absolute deviation.

The y-coordinates y1 = x4, y2 = x3+x4, y3 = x2+x4, y4 = x1+x2+x3+x4 turn
the uncorrelatedness condition on geometric supports into a four-term
power sum; ``to_y`` and ``from_y`` convert between the two charts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numeric import (
    Scalar,
    as_exact,
    exact_abs,
    exact_sign,
    format_rational,
    scalar_from_json,
    scalar_to_json,
)

NINTH = Fraction(1, 9)

TABLE_SCHEMA = "uncorrsets/table"


class NegativeEntry(ValueError):
    """A joint table cell went negative; carries the offending (row, col)."""

    def __init__(self, row: int, col: int, value):
        super().__init__(f"entry ({row}, {col}) = {value} is negative")
        self.row = row
        self.col = col
        self.value = value


class ZeroVector(ValueError):
    """Rescaling the zero offset vector has no canonical scale."""


class SupportKind(enum.Enum):
    POSITIVE_ORDERED = "positive-ordered"
    SYMMETRIC_ZERO = "symmetric-zero"
    GENERAL_ORDERED = "general-ordered"


@dataclass(frozen=True)
class Support3:
    """Three strictly increasing rational support points."""

    points: tuple[Fraction, Fraction, Fraction]
    kind: SupportKind

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points)
        if len(pts) != 3:
            raise ValueError("support needs exactly three points")
        if not (pts[0] < pts[1] < pts[2]):
            raise ValueError(f"support points must increase strictly: {pts}")
        if self.kind is SupportKind.POSITIVE_ORDERED and pts[0] <= 0:
            raise ValueError("positive-ordered support must start above zero")
        if self.kind is SupportKind.SYMMETRIC_ZERO and (
            pts[1] != 0 or pts[0] != -pts[2]
        ):
            raise ValueError(f"symmetric support must be (-v, 0, v): {pts}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_values(cls, a, b, c) -> "Support3":
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if b == 0 and a == -c:
            kind = SupportKind.SYMMETRIC_ZERO
        elif a > 0:
            kind = SupportKind.POSITIVE_ORDERED
        else:
            kind = SupportKind.GENERAL_ORDERED
        return cls((a, b, c), kind)

    @classmethod
    def symmetric(cls, alpha) -> "Support3":
        alpha = Fraction(alpha)
        if alpha <= 0:
            raise ValueError("symmetric support needs alpha > 0")
        return cls((-alpha, Fraction(0), alpha), SupportKind.SYMMETRIC_ZERO)

    def to_json(self) -> dict:
        return {
            "points": [format_rational(p) for p in self.points],
            "kind": self.kind.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Support3":
        pts = [Fraction(p) for p in obj["points"]]
        return cls(tuple(pts), SupportKind(obj["kind"]))


@dataclass(frozen=True)
class BetaSupport:
    """Geometric support (alpha, alpha*beta, alpha*beta^2) with beta > 1."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta <= 1:
            raise ValueError("beta must exceed 1")

    def to_support3(self) -> Support3:
        a = self.alpha
        return Support3(
            (a, a * self.beta, a * self.beta**2), SupportKind.POSITIVE_ORDERED
        )

    def a_value(self, j: int) -> Fraction:
        """A_j collapses to 1 + beta^(-j) on geometric supports."""
        if j < 1:
            raise ValueError("moment order must be >= 1")
        return 1 + self.beta ** (-j)

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BetaSupport":
        return cls(Fraction(obj["alpha"]), Fraction(obj["beta"]))


def support_to_json(support) -> dict:
    return support.to_json()


def support_from_json(obj: dict):
    if "alpha" in obj:
        return BetaSupport.from_json(obj)
    return Support3.from_json(obj)


def _four(values: Sequence) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    vals = tuple(as_exact(v) for v in values)
    if len(vals) != 4:
        raise ValueError(f"expected four components, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class OffsetVector:
    """The four free deviations (x1, x2, x3, x4) of a joint table."""

    x: tuple[Scalar, Scalar, Scalar, Scalar]

    def __post_init__(self):
        object.__setattr__(self, "x", _four(self.x))

    @classmethod
    def of(cls, x1, x2, x3, x4) -> "OffsetVector":
        return cls((x1, x2, x3, x4))

    @property
    def is_zero(self) -> bool:
        return all(exact_sign(v) == 0 for v in self.x)

    def deviations(self) -> tuple[tuple[Scalar, ...], ...]:
        """Full 3x3 deviation table, rows Y = a,b,c and columns X = a,b,c."""
        x1, x2, x3, x4 = self.x
        return (
            (x4, x3, -x3 - x4),
            (x2, x1, -x1 - x2),
            (-x2 - x4, -x1 - x3, x1 + x2 + x3 + x4),
        )

    def transpose(self) -> "OffsetVector":
        """Offsets of the swapped pair (Y, X): x2 and x3 trade places."""
        x1, x2, x3, x4 = self.x
        return OffsetVector((x1, x3, x2, x4))

    def scaled(self, factor) -> "OffsetVector":
        return OffsetVector(tuple(as_exact(factor * v) for v in self.x))

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.x]

    @classmethod
    def from_json(cls, obj: Sequence) -> "OffsetVector":
        return cls(tuple(scalar_from_json(v) for v in obj))


@dataclass(frozen=True)
class YVector:
    """Power-sum coordinates (y1, y2, y3, y4) of an offset vector."""

    y: tuple[Scalar, Scalar, Scalar, Scalar]

    def __post_init__(self):
        object.__setattr__(self, "y", _four(self.y))

    @classmethod
    def of(cls, y1, y2, y3, y4) -> "YVector":
        return cls((y1, y2, y3, y4))

    def to_json(self) -> list:
        return [scalar_to_json(v) for v in self.y]

    @classmethod
    def from_json(cls, obj: Sequence) -> "YVector":
        return cls(tuple(scalar_from_json(v) for v in obj))


def to_y(x: OffsetVector) -> YVector:
    x1, x2, x3, x4 = x.x
    return YVector((x4, x3 + x4, x2 + x4, x1 + x2 + x3 + x4))


def from_y(y: YVector) -> OffsetVector:
    y1, y2, y3, y4 = y.y
    return OffsetVector((y4 - y2 - y3 + y1, y3 - y1, y2 - y1, y1))


def rescale(x: OffsetVector) -> OffsetVector:
    """Scale offsets so every table entry lands in [1/18, 1/6].

    The canonical scale is (1/9) / (2M) with M the largest absolute
    deviation, so the most extreme cells sit exactly at 1/9 +- 1/18.
    """
    if x.is_zero:
        raise ZeroVector("cannot rescale the zero offset vector")
    m = Fraction(0)
    for row in x.deviations():
        for dev in row:
            a = exact_abs(dev)
            if m < a:
                m = a
    return x.scaled(NINTH / (2 * m))


@dataclass(frozen=True)
class JointTable:
    """Joint pmf of (X, Y), both uniform on three points.

    entries[r][c] is P(X = support_x.points[c], Y = support_y.points[r]).
    Construction validates nonnegativity and the uniform marginals.
    """

    entries: tuple[tuple[Scalar, ...], ...]
    support_x: Support3
    support_y: Support3

    def __post_init__(self):
        rows = tuple(tuple(as_exact(v) for v in row) for row in self.entries)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("joint table must be 3x3")
        object.__setattr__(self, "entries", rows)
        third = Fraction(1, 3)
        for r in range(3):
            for c in range(3):
                if exact_sign(rows[r][c]) < 0:
                    raise NegativeEntry(r, c, rows[r][c])
        for r in range(3):
            if sum(rows[r], Fraction(0)) != third:
                raise ValueError(f"row {r} does not sum to 1/3")
        for c in range(3):
            if sum((rows[r][c] for r in range(3)), Fraction(0)) != third:
                raise ValueError(f"column {c} does not sum to 1/3")

    @classmethod
    def independent(cls, support_x: Support3, support_y: Support3) -> "JointTable":
        row = (NINTH, NINTH, NINTH)
        return cls((row, row, row), support_x, support_y)

    def transpose(self) -> "JointTable":
        flipped = tuple(
            tuple(self.entries[c][r] for c in range(3)) for r in range(3)
        )
        return JointTable(flipped, self.support_y, self.support_x)

    def to_json(self) -> dict:
        return {
            "schema": TABLE_SCHEMA,
            "support_x": self.support_x.to_json(),
            "support_y": self.support_y.to_json(),
            "entries": [[scalar_to_json(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "JointTable":
        return cls(
            tuple(
                tuple(scalar_from_json(v) for v in row) for row in obj["entries"]
            ),
            Support3.from_json(obj["support_x"]),
            Support3.from_json(obj["support_y"]),
        )


def table_from_offsets(
    x: OffsetVector, support_x: Support3, support_y: Support3
) -> JointTable:
    """1/9 plus the deviation table; raises NegativeEntry when invalid."""
    entries = tuple(
        tuple(as_exact(NINTH + dev) for dev in row) for row in x.deviations()
    )
    return JointTable(entries, support_x, support_y)
