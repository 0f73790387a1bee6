"""Command line access to constructions, enumeration and verification.

Every subcommand prints deterministic JSON (sorted keys) except
``enumerate --format csv``, which emits bare point rows.  Exit status
is 0 for a positive verdict (match, identities equal, independent),
1 for a negative verdict, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions, determinants, engine, model, selftest
from .constructions import AlgebraicSlopeLine, SlopeLineParams
from .engine import SetDescriptor
from .model import BetaSupport, OffsetVector, Support3
from .numeric import format_rational


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _parse_box(text: str) -> tuple[int, int]:
    try:
        j, k = text.lower().split("x")
        return int(j), int(k)
    except ValueError:
        raise ValueError(f"box must look like 12x12, got {text!r}") from None


def _parse_point(text: str) -> tuple[int, int]:
    j, k = text.split(",")
    return int(j), int(k)


def _parse_points(text: str) -> list[tuple[int, int]]:
    return [_parse_point(chunk) for chunk in text.split(";") if chunk]


def _load_doc(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _support_from_args(args) -> Support3 | BetaSupport:
    if getattr(args, "beta", None) is not None:
        return BetaSupport(Fraction(args.alpha), Fraction(args.beta))
    a, b, c = (Fraction(v) for v in args.support.split(","))
    return Support3.from_values(a, b, c)


def _load_witness(path: str):
    """Returns (x, support, descriptor, algebraic-or-None)."""
    doc = _load_doc(path)
    if doc.get("schema") != engine.WITNESS_SCHEMA:
        raise ValueError("input is not a witness document")
    if "algebraic" in doc:
        line = AlgebraicSlopeLine.from_json(doc["algebraic"])
        desc = SetDescriptor.from_json(doc["descriptor"])
        return None, None, desc, line
    x = OffsetVector.from_json(doc["x"])
    support = model.support_from_json(doc["support"])
    desc = SetDescriptor.from_json(doc["descriptor"])
    return x, support, desc, None


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_construct(args) -> int:
    family = args.family
    if family in ("antidiagonal", "slopeline") and args.beta is None and args.k is None:
        raise ValueError(f"{family} needs --beta (and --alpha) or, for the "
                         "near-line variant, --k")
    if family == "empty":
        built = constructions.make_empty(_support_from_args(args))
    elif family == "all":
        built = constructions.make_full(_support_from_args(args))
    elif family == "diagonal":
        built = constructions.make_diagonal(_support_from_args(args))
    elif family == "singleton":
        j, k = _parse_point(_require(args.point, "--point"))
        built = constructions.make_singleton(_support_from_args(args), j, k)
    elif family == "two-point":
        pts = _parse_points(_require(args.points, "--points"))
        if len(pts) != 2:
            raise ValueError("--points needs exactly two j,k pairs")
        built = constructions.make_two_point(_support_from_args(args), *pts)
    elif family == "vline":
        built = constructions.make_vline(
            _support_from_args(args), _require(args.j, "--j")
        )
    elif family == "hline":
        built = constructions.make_hline(
            _support_from_args(args), _require(args.k, "--k")
        )
    elif family == "cross":
        built = constructions.make_cross(
            _support_from_args(args), _require(args.j, "--j"), _require(args.k, "--k")
        )
    elif family == "antidiagonal":
        support = _support_from_args(args)
        if not isinstance(support, BetaSupport):
            raise ValueError("antidiagonal needs a geometric support (--beta)")
        built = constructions.make_antidiagonal(support, _require(args.m, "--m"))
    elif family == "slopeline":
        m = _require(args.m, "--m")
        if args.k is not None:
            params = SlopeLineParams(
                m=m,
                mode=constructions.MODE_BETA_STAR,
                k=args.k,
                width=Fraction(args.width),
            )
        else:
            params = SlopeLineParams(
                m=m,
                mode=constructions.MODE_AT_OR_ABOVE,
                beta=Fraction(_require(args.beta, "--beta")),
            )
        built = constructions.make_slopeline(params)
    elif family == "lattice-union":
        names = [n for n in (args.lattices or "").split(",") if n]
        built = constructions.make_lattice_union(Fraction(args.alpha), names)
    else:
        raise ValueError(f"unknown family {family!r}")
    _emit(built.to_json())
    return 0


def _require(value, flag):
    if value is None:
        raise ValueError(f"this construction needs {flag}")
    return value


def _cmd_enumerate(args) -> int:
    jmax, kmax = _parse_box(args.box)
    doc = _load_doc(args.witness)
    if doc.get("schema") == engine.WITNESS_SCHEMA:
        if "algebraic" in doc:
            line = AlgebraicSlopeLine.from_json(doc["algebraic"])
            points = line.enumerate_box(jmax, kmax)
        else:
            x = OffsetVector.from_json(doc["x"])
            support = model.support_from_json(doc["support"])
            points = engine.enumerate_box_offsets(x, support, jmax, kmax)
    elif doc.get("schema") == model.TABLE_SCHEMA:
        table = model.JointTable.from_json(doc)
        points = engine.enumerate_box_table(table, jmax, kmax)
    else:
        raise ValueError("input is neither a witness nor a table document")
    if args.format == "csv":
        print("j,k")
        for j, k in points:
            print(f"{j},{k}")
    else:
        _emit({"box": [jmax, kmax], "points": [list(p) for p in points]})
    return 0


def _cmd_verify(args) -> int:
    jmax, kmax = _parse_box(args.box)
    x, support, desc, line = _load_witness(args.witness)
    if args.descriptor:
        desc = SetDescriptor.parse(args.descriptor)
    if line is not None:
        found = line.enumerate_box(jmax, kmax)
        predicted = desc.points_in_box(jmax, kmax)
        missing = tuple(sorted(predicted - set(found)))
        extra = tuple(sorted(set(found) - predicted))
        verdict = engine.MATCH if not missing and not extra else engine.MISMATCH
        report = engine.UncorrReport(
            verdict, desc, (jmax, kmax), tuple(found), missing, extra, None
        )
    else:
        report = engine.verify_claim(x, support, desc, jmax, kmax)
    _emit(report.to_json())
    return 0 if report.verdict == engine.MATCH else 1


def _cmd_classify(args) -> int:
    doc = _load_doc(args.table)
    if doc.get("schema") == engine.WITNESS_SCHEMA:
        x = OffsetVector.from_json(doc["x"])
        support = model.support_from_json(doc["support"])
        s3 = support.to_support3() if isinstance(support, BetaSupport) else support
        if not x.is_zero:
            x = model.rescale(x)
        table = model.table_from_offsets(x, s3, s3)
    elif doc.get("schema") == model.TABLE_SCHEMA:
        table = model.JointTable.from_json(doc)
    else:
        raise ValueError("input is neither a witness nor a table document")
    desc = engine.classify_symmetric(table)
    _emit({"descriptor": desc.to_json()})
    return 0


def _cmd_beta0(args) -> int:
    lo, hi = constructions.beta0(args.m, Fraction(args.width))
    _emit(
        {
            "m": args.m,
            "lo": format_rational(lo),
            "hi": format_rational(hi),
            "width": format_rational(hi - lo),
            "approx": float((lo + hi) / 2),
        }
    )
    return 0


def _cmd_betastar(args) -> int:
    lo, hi = constructions.beta_star(args.m, args.k, Fraction(args.width))
    _emit(
        {
            "m": args.m,
            "k": args.k,
            "lo": format_rational(lo),
            "hi": format_rational(hi),
            "width": format_rational(hi - lo),
            "approx": float((lo + hi) / 2),
        }
    )
    return 0


def _cmd_det(args) -> int:
    if args.family == "f":
        result = determinants.f_check(args.m, args.n)
    elif args.family == "g":
        result = determinants.g_check(args.m, args.n)
    else:
        result = determinants.det2_check(args.m, args.n)
    _emit(result.to_json(summary=args.summary))
    return 0 if result.equal else 1


def _cmd_indep_cert(args) -> int:
    pts = _parse_points(args.points)
    support = BetaSupport(Fraction(args.alpha), Fraction(args.beta))
    cert = determinants.independence_certificate(pts, support)
    _emit(cert.to_json())
    return 0 if cert.independent else 1


def _cmd_selftest(args) -> int:
    failures = selftest.run(seed=args.seed, fast=args.fast)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncorrsets",
        description="exact uncorrelatedness sets of three-point uniform pairs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a witness for a set shape")
    p.add_argument(
        "family",
        choices=[
            "empty",
            "all",
            "diagonal",
            "singleton",
            "two-point",
            "vline",
            "hline",
            "cross",
            "antidiagonal",
            "slopeline",
            "lattice-union",
        ],
    )
    p.add_argument("--support", default="1,2,3", help="a,b,c rational points")
    p.add_argument("--alpha", default="1", help="scale of a geometric or symmetric support")
    p.add_argument("--beta", default=None, help="ratio of a geometric support")
    p.add_argument("--point", default=None, help="j,k")
    p.add_argument("--points", default=None, help="j1,k1;j2,k2")
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--lattices", default=None, help="comma list from ee,eo,oe,oo")
    p.add_argument("--width", default="1/1000000000000", help="isolation width")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="list the set of a witness in a box")
    p.add_argument("--witness", required=True, help="witness/table file or -")
    p.add_argument("--box", default="12x12", help="JxK bounds")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="re-derive a claimed set and compare")
    p.add_argument("--witness", required=True, help="witness file or -")
    p.add_argument("--box", default="12x12")
    p.add_argument("--descriptor", default=None, help="override claim, e.g. cross:2,3")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="parity classification on symmetric supports")
    p.add_argument("--table", required=True, help="witness/table file or -")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("beta0", help="isolate the threshold ratio for slope m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--width", default="1/1000000000000")
    p.set_defaults(func=_cmd_beta0)

    p = sub.add_parser("betastar", help="isolate the near-line ratio for (m, k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--width", default="1/1000000000000")
    p.set_defaults(func=_cmd_betastar)

    p = sub.add_parser("det", help="check a determinant identity")
    p.add_argument("family", choices=["f", "g", "det2"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--summary", action="store_true", help="sizes only, no terms")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("indep-cert", help="certify four collinear order pairs")
    p.add_argument("--points", required=True, help="j1,k1;j2,k2;j3,k3;j4,k4")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", required=True)
    p.set_defaults(func=_cmd_indep_cert)

    p = sub.add_parser("selftest", help="run the seeded invariant audit")
    p.add_argument("--seed", type=int, default=20250817)
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
