"""Seeded end-to-end audit of the package invariants.

Runs the same cross-checks the test suite freezes, but as a quick
PASS/FAIL console report: moment route against condition route on
random offsets, witness constructions against their claimed sets,
determinant expansions against closed forms, and the structural
invariants of enumerated sets.  Everything is exact; a single FAIL
means broken arithmetic, not bad luck.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import constructions, determinants, engine, model
from .engine import ASequence, SetDescriptor
from .model import BetaSupport, OffsetVector, Support3
from .numeric import QuadExt


class _Reporter:
    def __init__(self, out):
        self.out = out
        self.failures = 0

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.out(f"ok   {label}")
        else:
            self.failures += 1
            self.out(f"FAIL {label}")


def _random_support(rng: random.Random) -> Support3:
    while True:
        pts = sorted(rng.sample(range(1, 40), 3))
        if pts[0] >= 1:
            den = rng.choice((1, 1, 2, 3))
            return Support3.from_values(
                Fraction(pts[0], den), Fraction(pts[1], den), Fraction(pts[2], den)
            )


def _random_offsets(rng: random.Random) -> OffsetVector:
    def scalar():
        if rng.random() < 0.25:
            return QuadExt(
                Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                2,
            )
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    while True:
        x = OffsetVector.of(scalar(), scalar(), scalar(), scalar())
        if not x.is_zero:
            return x


def run(seed: int = 20250817, fast: bool = False, out=print) -> int:
    rng = random.Random(seed)
    rep = _Reporter(out)
    rounds = 6 if fast else 20
    box = 6 if fast else 8

    # moment route vs condition route on random data
    agree = True
    for _ in range(rounds):
        support = _random_support(rng)
        x = model.rescale(_random_offsets(rng))
        table = model.table_from_offsets(x, support, support)
        seq = ASequence(support)
        for j in range(1, box + 1):
            for k in range(1, box + 1):
                via_moments = engine.is_uncorrelated(table, j, k)
                via_condition = (
                    engine.condition_lhs(x, seq, j, k) == 0
                )
                if via_moments != via_condition:
                    agree = False
    rep.check(agree, "moment route agrees with condition route")

    # rescaled tables are valid and bounded away from zero
    bounded = True
    for _ in range(rounds):
        support = _random_support(rng)
        x = model.rescale(_random_offsets(rng))
        table = model.table_from_offsets(x, support, support)
        lo, hi = Fraction(1, 18), Fraction(1, 6)
        for row in table.entries:
            for v in row:
                if not (lo <= v <= hi):
                    bounded = False
    rep.check(bounded, "rescaled entries stay within [1/18, 1/6]")

    # swapping the two variables transposes the set
    sym = True
    for _ in range(rounds):
        support = _random_support(rng)
        x = _random_offsets(rng)
        here = engine.enumerate_box_offsets(x, support, box, box)
        there = engine.enumerate_box_offsets(x.transpose(), support, box, box)
        if sorted((k, j) for j, k in here) != sorted(there):
            sym = False
    rep.check(sym, "transposing offsets transposes the set")

    # golden witnesses enumerate to their claimed sets
    support = Support3.from_values(1, 2, 3)
    seq = ASequence(support)
    bs = BetaSupport(1, 2)
    cases = [
        (constructions.make_empty(support), support),
        (constructions.make_diagonal(support), support),
        (constructions.make_singleton(support, 2, 3), support),
        (constructions.make_two_point(support, (1, 2), (2, 1)), support),
        (constructions.make_vline(support, 2), support),
        (constructions.make_hline(support, 3), support),
        (constructions.make_cross(support, 2, 3), support),
        (constructions.make_antidiagonal(bs, 4), bs),
        (
            constructions.make_slopeline(
                constructions.SlopeLineParams(
                    m=2, mode=constructions.MODE_AT_OR_ABOVE, beta=Fraction(2)
                )
            ),
            bs,
        ),
    ]
    for built, sup in cases:
        report = engine.verify_claim(built.x, sup, built.descriptor, box, box)
        rep.check(
            report.verdict == engine.MATCH and report.analytic_ok is True,
            f"witness {built.name!r} matches its claim with a pattern proof",
        )

    # enumerated sets respect line closure and cross maximality
    structural = True
    for built, sup in cases:
        pts = engine.enumerate_box_offsets(built.x, sup, box, box)
        if engine.column_closure_violations(pts, box, box):
            structural = False
        if engine.cross_maximality_violations(pts, box, box):
            structural = False
    rep.check(structural, "enumerated sets respect closure and maximality")

    # all sixteen parity-class unions are classified back exactly
    lattice_ok = True
    names = engine.LATTICE_NAMES
    for mask in range(16):
        chosen = tuple(n for i, n in enumerate(names) if mask & (1 << i))
        built = constructions.make_lattice_union(1, chosen)
        x = built.x if built.x.is_zero else model.rescale(built.x)
        table = model.table_from_offsets(x, built.support, built.support)
        desc = engine.classify_symmetric(table)
        want = SetDescriptor.lattice_union(chosen, engine.GLOBAL_ANALYTIC)
        if desc != want:
            lattice_ok = False
    rep.check(lattice_ok, "sixteen parity unions classify back to themselves")

    # determinant identities, symbolically and at random points
    orders = [(2, 3), (2, 4), (3, 5)] if fast else [(2, 3), (2, 4), (3, 5), (4, 6)]
    det_ok = all(determinants.f_check(m, n).equal for m, n in orders)
    det_ok = det_ok and all(
        determinants.g_check(m, n).equal for m, n in [(1, 2), (2, 3), (3, 4)]
    )
    det_ok = det_ok and all(
        determinants.det2_check(j, m).equal for j in range(0, 4) for m in range(j, 5)
    )
    det_ok = det_ok and all(
        determinants.sigma_diff_identity(k) for k in range(1, 9)
    )
    rep.check(det_ok, "determinant and power-sum identities hold symbolically")

    sample_ok = True
    for _ in range(rounds):
        pt = [Fraction(rng.randint(1, 30), rng.randint(1, 6)) for _ in range(4)]
        m, n = rng.choice(orders)
        if determinants.f_direct(m, n).evaluate(pt) != determinants.f_closed(
            m, n
        ).evaluate(pt):
            sample_ok = False
    rep.check(sample_ok, "random-point evaluations of both routes agree")

    # four collinear order pairs certify independence
    cert = determinants.independence_certificate(
        [(1, 2), (2, 4), (3, 6), (4, 8)], BetaSupport(1, 2)
    )
    rep.check(
        cert.independent and cert.cross_checked and cert.nullspace_dim == 0,
        "collinear four-point system certified independent",
    )

    out(
        f"{rep.failures} failure(s)"
        if rep.failures
        else "all self-test sections passed"
    )
    return rep.failures
