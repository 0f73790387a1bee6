from fractions import Fraction
from itertools import combinations

import pytest

from uncorrsets.constructions import (
    AlgebraicSlopeLine,
    BetaTooSmall,
    MODE_AT_OR_ABOVE,
    MODE_BETA_STAR,
    SlopeLineParams,
    antidiagonal_witness,
    beta0,
    beta0_poly,
    beta_star,
    beta_star_poly,
    make_antidiagonal,
    make_cross,
    make_diagonal,
    make_empty,
    make_full,
    make_hline,
    make_lattice_union,
    make_singleton,
    make_slopeline,
    make_two_point,
    make_vline,
    slopeline_beta_star,
    slopeline_d_poly,
    slopeline_y_polys,
    two_point_witness,
)
from uncorrsets.engine import (
    ASequence,
    MATCH,
    classify_symmetric,
    enumerate_box_offsets,
    verify_claim,
)
from uncorrsets.model import (
    BetaSupport,
    Support3,
    rescale,
    table_from_offsets,
)
from uncorrsets.polynomials import IntPoly, sturm_root_count

S123 = Support3.from_values(1, 2, 3)
GEO = BetaSupport(1, 2)


def _assert_certified(construction, jmax=16, kmax=16):
    report = verify_claim(
        construction.x, construction.support, construction.descriptor, jmax, kmax
    )
    assert report.verdict == MATCH, report.to_json()
    assert report.analytic_ok is True


def test_elementary_golden_sets():
    _assert_certified(make_empty(S123))
    _assert_certified(make_full(S123))
    _assert_certified(make_diagonal(S123))
    _assert_certified(make_diagonal(GEO))
    for i in (1, 2, 3):
        _assert_certified(make_vline(S123, i))
        _assert_certified(make_hline(S123, i))
    _assert_certified(make_cross(S123, 2, 3))
    _assert_certified(make_cross(GEO, 1, 4))


def test_singleton_golden_sets():
    for point in ((1, 1), (2, 3), (5, 7)):
        _assert_certified(make_singleton(S123, *point))
        _assert_certified(make_singleton(GEO, *point))


def test_two_point_golden_sets():
    for pair in (((1, 2), (2, 1)), ((2, 5), (4, 3))):
        _assert_certified(make_two_point(S123, *pair))
        _assert_certified(make_two_point(GEO, *pair))


def test_two_point_rejects_shared_lines():
    seq = ASequence(S123)
    with pytest.raises(ValueError):
        two_point_witness(seq, (2, 3), (2, 3))
    with pytest.raises(ValueError):
        two_point_witness(seq, (2, 3), (2, 5))
    with pytest.raises(ValueError):
        two_point_witness(seq, (1, 4), (3, 4))


def test_antidiagonal_golden_sets():
    for m in (2, 4, 7):
        _assert_certified(make_antidiagonal(GEO, m), 12, 12)
    bumpy = BetaSupport(Fraction(1, 3), Fraction(5, 2))
    _assert_certified(make_antidiagonal(bumpy, 3), 12, 12)
    with pytest.raises(ValueError):
        antidiagonal_witness(GEO, 1)


def test_antidiagonal_y_shape():
    y = antidiagonal_witness(GEO, 5)
    assert y.y == (32, 0, 0, -1)
    c = make_antidiagonal(GEO, 5)
    assert c.y == y
    doc = c.to_json()
    assert doc["y"] == ["32", "0", "0", "-1"]


def test_threshold_root_m2_matches_decimal_oracle():
    lo, hi = beta0(2)
    # the root of B^3 - B^2 - B - 1 is 1.83928675521416113255...
    assert hi - lo <= Fraction(1, 10**12)
    assert lo < Fraction("1.8392867552141612")
    assert hi > Fraction("1.8392867552141611")
    p = beta0_poly(2)
    assert p(lo) < 0 < p(hi)


def test_threshold_root_brackets_for_higher_slopes():
    for m in (3, 4, 6):
        p = beta0_poly(m)
        lo, hi = beta0(m, Fraction(1, 10**9))
        assert 1 < lo < hi < 2
        assert p(lo) < 0 < p(hi)
        assert hi - lo <= Fraction(1, 10**9)
    with pytest.raises(ValueError):
        beta0_poly(1)


def test_near_line_polynomial_shape():
    p = beta_star_poly(2, 9)
    assert p.coeffs == (0, 0, 0, 0, 0, -1, 1, 1, 1, -1, -1, -1, 1)
    for m, k in ((2, 9), (2, 12), (3, 13), (4, 17), (5, 21)):
        q = beta_star_poly(m, k)
        assert q(1) == 0
        assert q.derivative()(1) == 8 * m - 2 * k
    with pytest.raises(ValueError):
        beta_star_poly(2, 8)


def test_near_line_root_m2_k9():
    lo, hi = beta_star(2, 9)
    assert hi - lo <= Fraction(1, 10**12)
    assert lo < Fraction("1.5823471837")
    assert hi > Fraction("1.5823471836")
    p = beta_star_poly(2, 9)
    assert p(lo) < 0 < p(hi)
    # the whole interval sits strictly below the threshold root
    assert beta0_poly(2)(hi) < 0


def test_difference_polynomial_factorizations():
    b2_minus_1 = IntPoly([-1, 0, 1])
    b_minus_1 = IntPoly([-1, 1])
    for m in (2, 3, 5):
        for i in (1, 2, 3):
            assert slopeline_d_poly(m, i, m * i).is_zero
        for k in (1, m + 1, 3 * m + 2):
            d1 = slopeline_d_poly(m, 1, k)
            want = b2_minus_1 * IntPoly.monomial(m + 1) * (
                IntPoly.monomial(k) - IntPoly.monomial(m)
            )
            assert d1 == want
            d2 = slopeline_d_poly(m, 2, k)
            want = (
                IntPoly.monomial(2)
                * b_minus_1
                * (IntPoly.monomial(m) + IntPoly([1]))
                * (IntPoly.monomial(k) - IntPoly.monomial(2 * m))
            )
            assert d2 == want
            d3 = slopeline_d_poly(m, 3, k)
            want = (
                IntPoly.monomial(2)
                * b2_minus_1
                * (IntPoly.monomial(k) - IntPoly.monomial(3 * m))
            )
            assert d3 == want
    # at j = 4 the difference matches the near-line polynomial up to
    # the factor (1 - B) B^2, which is how the fourth point appears
    for m, k in ((2, 9), (2, 12), (3, 13)):
        d4 = slopeline_d_poly(m, 4, k)
        lift = IntPoly([1, -1]) * IntPoly.monomial(2) * beta_star_poly(m, k)
        assert d4 == lift


def test_slopeline_at_rational_ratio():
    c = make_slopeline(SlopeLineParams(m=2, mode=MODE_AT_OR_ABOVE, beta=2))
    assert c.support == GEO
    assert c.y.y == (128, -112, 28, -2)
    report = verify_claim(c.x, c.support, c.descriptor, 12, 12)
    assert report.verdict == MATCH
    assert report.analytic_ok is True
    assert set(report.found) == {(1, 2), (2, 4), (3, 6)}
    # bigger slopes and ratios work the same way
    c = make_slopeline(SlopeLineParams(m=3, mode=MODE_AT_OR_ABOVE, beta=Fraction(5, 2)))
    report = verify_claim(c.x, c.support, c.descriptor, 12, 12)
    assert report.verdict == MATCH
    assert set(report.found) == {(1, 3), (2, 6), (3, 9)}


def test_slopeline_rejects_small_ratio():
    with pytest.raises(BetaTooSmall) as info:
        make_slopeline(SlopeLineParams(m=2, mode=MODE_AT_OR_ABOVE, beta=Fraction(9, 5)))
    assert "threshold root" in str(info.value)


def test_slopeline_params_validation():
    with pytest.raises(ValueError):
        SlopeLineParams(m=1, mode=MODE_AT_OR_ABOVE, beta=2)
    with pytest.raises(ValueError):
        SlopeLineParams(m=2, mode="guess", beta=2)
    with pytest.raises(ValueError):
        SlopeLineParams(m=2, mode=MODE_AT_OR_ABOVE)
    with pytest.raises(ValueError):
        SlopeLineParams(m=2, mode=MODE_BETA_STAR)
    with pytest.raises(ValueError):
        make_slopeline(SlopeLineParams(m=2, mode=MODE_BETA_STAR, k=8))


def test_algebraic_slopeline_m2_k9():
    line = slopeline_beta_star(2, 9)
    assert sturm_root_count(line.poly, *line.interval) == 1
    assert line.contains(1, 2)
    assert line.contains(4, 9)
    assert not line.contains(4, 8)
    assert not line.contains(1, 3)
    assert line.enumerate_box(12, 12) == [(1, 2), (2, 4), (3, 6), (4, 9)]
    assert line.descriptor().points == ((1, 2), (2, 4), (3, 6), (4, 9))
    again = AlgebraicSlopeLine.from_json(line.to_json())
    assert again == line


def test_algebraic_slopeline_other_orders():
    line = slopeline_beta_star(3, 14)
    pts = line.enumerate_box(14, 14)
    assert pts == [(1, 3), (2, 6), (3, 9), (4, 14)]


def test_beta_star_construction_bundles_algebraic_data():
    c = make_slopeline(SlopeLineParams(m=2, mode=MODE_BETA_STAR, k=9))
    assert c.x is None and c.support is None
    assert c.algebraic is not None
    doc = c.to_json()
    assert doc["algebraic"]["m"] == 2
    assert doc["algebraic"]["k"] == 9
    assert "interval" in doc["algebraic"]


def test_all_sixteen_parity_unions():
    names = ("ee", "eo", "oe", "oo")
    subsets = [()]
    for r in (1, 2, 3, 4):
        subsets.extend(combinations(names, r))
    for subset in subsets:
        c = make_lattice_union(1, subset)
        pts = enumerate_box_offsets(c.x, c.support, 6, 6)
        assert set(pts) == c.descriptor.points_in_box(6, 6)
        report = verify_claim(c.x, c.support, c.descriptor, 6, 6)
        assert report.verdict == MATCH
        assert report.analytic_ok is True
        if not c.x.is_zero:
            table = table_from_offsets(rescale(c.x), c.support, c.support)
            assert classify_symmetric(table) == c.descriptor
