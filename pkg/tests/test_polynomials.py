import random
from fractions import Fraction

import pytest

from uncorrsets.polynomials import (
    ArityMismatch,
    IntPoly,
    MultiPoly,
    NoSignChange,
    isolate_root,
    sturm_root_count,
)


# ---------------------------------------------------------------------------
# univariate


def test_intpoly_basics():
    p = IntPoly([1, 0, -3, 2])  # 2B^3 - 3B^2 + 1
    assert p.degree == 3
    assert p(2) == 5
    assert p(Fraction(1, 2)) == Fraction(1, 2)
    assert p.derivative() == IntPoly([0, -6, 6])
    assert IntPoly([0, 0]).is_zero
    assert IntPoly.monomial(4, -2) == IntPoly([0, 0, 0, 0, -2])
    q = IntPoly([1, 1])
    assert p + q == IntPoly([2, 1, -3, 2])
    assert q * q == IntPoly([1, 2, 1])
    assert -q == IntPoly([-1, -1])
    assert 3 * q == IntPoly([3, 3])


def test_primitive_and_content():
    p = IntPoly([6, -12, 18])
    assert p.content() == 6
    assert p.primitive() == IntPoly([1, -2, 3])
    assert IntPoly([-2, 0, -4]).primitive() == IntPoly([1, 0, 2])


def test_gcd_and_squarefree():
    x_minus_1 = IntPoly([-1, 1])
    x_minus_2 = IntPoly([-2, 1])
    p = x_minus_1 * x_minus_1 * x_minus_2
    q = x_minus_1 * IntPoly([5, 1])
    assert IntPoly.gcd(p, q) == x_minus_1
    assert p.squarefree_part() == x_minus_1 * x_minus_2
    assert IntPoly.gcd(p, IntPoly([7])).degree == 0
    # scaled inputs do not change the primitive gcd
    assert IntPoly.gcd(3 * p, -5 * q) == x_minus_1


def test_sturm_count():
    # (B-1)(B-2)(B-4): distinct real roots 1, 2, 4
    p = IntPoly([-1, 1]) * IntPoly([-2, 1]) * IntPoly([-4, 1])
    assert sturm_root_count(p, Fraction(0), Fraction(5)) == 3
    assert sturm_root_count(p, Fraction(3, 2), Fraction(5)) == 2
    assert sturm_root_count(p, Fraction(5), Fraction(9)) == 0
    # repeated roots are counted once
    sq = IntPoly([-1, 1]) ** 3 * IntPoly([-2, 1])
    assert sturm_root_count(sq, Fraction(0), Fraction(3)) == 2
    with pytest.raises(ValueError):
        sturm_root_count(p, Fraction(1), Fraction(3))


def test_isolate_root_bisection():
    p = IntPoly([-2, 0, 1])  # B^2 - 2
    lo, hi = isolate_root(p, 1, 2, Fraction(1, 10**9))
    assert hi - lo <= Fraction(1, 10**9)
    assert p(lo) < 0 < p(hi)
    assert lo < hi
    # the interval brackets sqrt(2) = 1.41421356237...
    assert Fraction("1.414213562") < hi
    assert lo < Fraction("1.414213563")


def test_isolate_root_requires_sign_change():
    p = IntPoly([1, 0, 1])  # B^2 + 1
    with pytest.raises(NoSignChange):
        isolate_root(p, 0, 5)
    with pytest.raises(ValueError):
        isolate_root(p, 3, 3)


def test_isolate_root_hits_exact_root():
    p = IntPoly([-9, 0, 1])  # roots at 3 and -3
    lo, hi = isolate_root(p, 1, 5)
    assert lo == hi == 3


# ---------------------------------------------------------------------------
# multivariate


def test_multipoly_construction_and_validation():
    p = MultiPoly(2, {(1, 0): 2, (0, 0): -1, (2, 2): 0})
    assert p.term_count == 2
    assert not p.is_zero
    assert p.total_degree() == 1
    with pytest.raises(ArityMismatch):
        MultiPoly(2, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        MultiPoly(2, {(-1, 0): 1})
    with pytest.raises(ArityMismatch):
        MultiPoly(2) + MultiPoly(3)


def test_multipoly_ring_laws_random():
    rng = random.Random(11)

    def rand():
        terms = {}
        for _ in range(rng.randint(0, 5)):
            e = (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
            terms[e] = rng.randint(-4, 4)
        return MultiPoly(3, terms)

    for _ in range(120):
        a, b, c = rand(), rand(), rand()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == MultiPoly.zero(3)
        assert a * 0 == MultiPoly.zero(3)
        assert a**2 == a * a


def test_multipoly_evaluate_mixed_scalars():
    from uncorrsets.numeric import QuadExt

    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = x**2 - 2 * y**2
    r = QuadExt(0, 1, 2)
    assert p.evaluate([r, Fraction(1)]) == 0
    assert p.evaluate([Fraction(3), Fraction(1)]) == 7
    with pytest.raises(ArityMismatch):
        p.evaluate([Fraction(1)])


def test_multipoly_sorted_terms_graded_lex():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = 1 + x + y + x * y**2 + x**3
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == [(3, 0), (1, 2), (1, 0), (0, 1), (0, 0)]


def test_multipoly_json_round_trip():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = 3 * x**2 * y - y + 7
    blob = p.to_json()
    assert blob[0] == {"exps": [2, 1], "coef": "3"}
    assert MultiPoly.from_json(blob) == p
    assert MultiPoly.from_json([], arity=2) == MultiPoly.zero(2)


def test_multipoly_repr_readable():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    assert repr(x**2 - y) == "MultiPoly(x^2 - y)"
