import math
import random
from fractions import Fraction

import pytest

from carterlib.scalars import GoldenNum, TAU, scalar_from_str, scalar_to_str


def test_golden_ratio_identities():
    assert TAU * TAU == TAU + 1
    assert 1 / TAU == TAU - 1
    assert TAU * (TAU - 1) == 1


def test_basic_arithmetic():
    x = GoldenNum(Fraction(1, 2), Fraction(-3, 4))
    y = GoldenNum(2, Fraction(1, 3))
    assert x + y == GoldenNum(Fraction(5, 2), Fraction(-5, 12))
    assert x - x == GoldenNum(0)
    assert x * 0 == GoldenNum(0)
    assert (x / y) * y == x
    assert -(-x) == x
    assert x + 1 == GoldenNum(Fraction(3, 2), Fraction(-3, 4))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GoldenNum(1) / GoldenNum(0)


def test_sign_against_float():
    rng = random.Random(7)
    r5 = math.sqrt(5)
    for _ in range(500):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        x = GoldenNum(a, b)
        approx = float(a) + float(b) * r5
        if abs(approx) > 1e-9:
            assert x.sign() == (1 if approx > 0 else -1)
        elif a == 0 and b == 0:
            assert x.sign() == 0


def test_total_order():
    vals = [GoldenNum(0), GoldenNum(1), TAU, TAU * TAU, GoldenNum(-1),
            GoldenNum(2), TAU - 1, -TAU]
    s = sorted(vals)
    floats = [float(v.a) + float(v.b) * math.sqrt(5) for v in s]
    assert floats == sorted(floats)


def test_hash_consistency_with_rationals():
    assert hash(GoldenNum(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert GoldenNum(Fraction(3, 2)) == Fraction(3, 2)


def test_str_round_trip():
    vals = [Fraction(3, 2), Fraction(-7), GoldenNum(0, 1), TAU,
            GoldenNum(Fraction(-1, 2), Fraction(3, 4)),
            GoldenNum(Fraction(1, 2), Fraction(-13, 4)), GoldenNum(0)]
    for v in vals:
        assert scalar_from_str(scalar_to_str(v)) == v
