"""Exact uncorrelatedness sets of three-point uniform random pairs.

The package constructs, enumerates and verifies the sets

    U(X, Y) = {(j, k) : E[X^j Y^k] = E[X^j] E[Y^k]}

for X, Y uniform on three-point supports, entirely in exact arithmetic:
rationals, quadratic irrationals, and isolated algebraic roots.
"""

from .model import (
    BetaSupport,
    JointTable,
    OffsetVector,
    Support3,
    SupportKind,
    YVector,
    from_y,
    rescale,
    table_from_offsets,
    to_y,
)
from .engine import (
    ASequence,
    SetDescriptor,
    UncorrReport,
    classify_symmetric,
    condition_lhs,
    enumerate_box_offsets,
    enumerate_box_table,
    is_uncorrelated,
    moment,
    verify_claim,
)
from .numeric import QuadExt

__all__ = [
    "ASequence",
    "BetaSupport",
    "JointTable",
    "OffsetVector",
    "QuadExt",
    "SetDescriptor",
    "Support3",
    "SupportKind",
    "UncorrReport",
    "YVector",
    "classify_symmetric",
    "condition_lhs",
    "enumerate_box_offsets",
    "enumerate_box_table",
    "from_y",
    "is_uncorrelated",
    "moment",
    "rescale",
    "table_from_offsets",
    "to_y",
    "verify_claim",
]

__version__ = "0.1.0"
