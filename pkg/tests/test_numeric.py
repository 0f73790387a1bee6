import random
from fractions import Fraction

import pytest

from uncorrsets.numeric import (
    MixedRadicand,
    QuadExt,
    as_exact,
    exact_abs,
    exact_sign,
    format_rational,
    parse_rational,
    scalar_from_json,
    scalar_to_json,
    sqrt2,
)


def test_radicand_validation():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 12)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 1)
    with pytest.raises(ValueError):
        QuadExt(1, 1, -2)
    QuadExt(1, 1, 2)
    QuadExt(0, 1, 30)


def test_arithmetic_against_square():
    r = sqrt2()
    assert r * r == 2
    assert (1 + r) * (1 - r) == -1
    assert (1 + r) ** 2 == QuadExt(3, 2, 2)
    assert (3 + 2 * r) * (3 - 2 * r) == 1
    assert (1 + r).inverse() == QuadExt(-1, 1, 2)
    assert 1 / (1 + r) == QuadExt(-1, 1, 2)
    assert (1 + r) ** -2 == QuadExt(3, -2, 2)


def test_mixed_radicands_rejected():
    with pytest.raises(MixedRadicand):
        QuadExt(1, 1, 2) + QuadExt(1, 1, 3)
    # equal rational values in different extensions still compare equal
    assert QuadExt(5, 0, 2) == QuadExt(5, 0, 3)


def test_sign_is_exact_near_ties():
    # 99/70 is a convergent of sqrt(2): the squared comparison must
    # resolve signs that floats get wrong at higher convergents
    assert (QuadExt(Fraction(99, 70), -1, 2)).sign() == 1
    assert (QuadExt(Fraction(-99, 70), 1, 2)).sign() == -1
    big = Fraction(131836323, 93222358)  # deeper convergent, above sqrt(2)
    assert QuadExt(big, -1, 2).sign() == 1
    assert QuadExt(0, 0, 2).sign() == 0
    assert QuadExt(0, -3, 2).sign() == -1


def test_ordering_and_abs():
    r = sqrt2()
    assert Fraction(7, 5) < r < Fraction(3, 2)
    assert 1 < r
    assert abs(1 - r) == r - 1
    assert exact_abs(Fraction(-3, 4)) == Fraction(3, 4)
    assert exact_sign(r - 2) == -1
    assert exact_sign(Fraction(0)) == 0


def test_random_field_laws():
    rng = random.Random(7)

    def rand():
        return QuadExt(
            Fraction(rng.randint(-8, 8), rng.randint(1, 5)),
            Fraction(rng.randint(-8, 8), rng.randint(1, 5)),
            2,
        )

    for _ in range(200):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a - b) + b == a
        if a.sign() != 0:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_hash_consistent_with_rational_equality():
    assert hash(QuadExt(Fraction(3, 2), 0, 2)) == hash(Fraction(3, 2))
    s = {QuadExt(1, 1, 2), QuadExt(1, 1, 2), Fraction(2)}
    assert len(s) == 2


def test_as_exact_collapses_rational_quadext():
    v = as_exact(QuadExt(Fraction(5, 3), 0, 2))
    assert isinstance(v, Fraction) and v == Fraction(5, 3)
    assert as_exact("7/2") == Fraction(7, 2)
    assert isinstance(as_exact(3), Fraction)
    with pytest.raises(TypeError):
        as_exact(1.5)


def test_rational_formatting():
    assert format_rational(Fraction(-3, 7)) == "-3/7"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("-3/7") == Fraction(-3, 7)


def test_scalar_json_round_trip():
    assert scalar_to_json(Fraction(1, 2)) == "1/2"
    assert scalar_to_json(5) == "5"
    enc = scalar_to_json(QuadExt(1, Fraction(-1, 2), 2))
    assert enc == {"a": "1", "b": "-1/2", "d": 2}
    assert scalar_from_json(enc) == QuadExt(1, Fraction(-1, 2), 2)
    assert scalar_from_json("9/4") == Fraction(9, 4)
    # a rational dressed up as a QuadExt comes back as a plain Fraction
    assert scalar_to_json(QuadExt(2, 0, 2)) == "2"


def test_pow_and_float():
    r = sqrt2()
    assert r**10 == 32
    assert r**0 == 1
    assert abs(float(QuadExt(1, 1, 2)) - 2.41421356) < 1e-7
    assert str(QuadExt(1, -1, 2)) == "1 - 1*sqrt(2)"
