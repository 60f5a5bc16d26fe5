import random
from fractions import Fraction

import mpmath
import pytest

from cfded import (
    DivisionByZero,
    MixedRadicand,
    PerfectSquare,
    QuadSurd,
    ZeroDenominator,
    squarefree_split,
    surd_arith,
    surd_ceil,
    surd_cmp,
    surd_floor,
    surd_normalize,
    to_decimal,
)
from support import random_surd

mpmath.mp.dps = 60


def mpval(x) -> mpmath.mpf:
    if isinstance(x, QuadSurd):
        return (x.a + x.b * mpmath.sqrt(x.N)) / x.c
    return mpmath.mpf(x.numerator) / x.denominator


def test_squarefree_split():
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(4) == (2, 1)
    assert squarefree_split(8) == (2, 2)
    assert squarefree_split(12) == (2, 3)
    assert squarefree_split(53) == (1, 53)
    assert squarefree_split(360) == (6, 10)
    assert squarefree_split(2**20 * 7) == (2**10, 7)
    with pytest.raises(ValueError):
        squarefree_split(0)


def test_squarefree_split_random():
    rng = random.Random(7)
    for _ in range(200):
        g = rng.randrange(1, 40)
        k = rng.choice([1, 2, 3, 5, 6, 7, 10, 11, 13, 15])
        got_g, got_k = squarefree_split(g * g * k)
        assert (got_g, got_k) == (g, k)


def test_normalize_canonical_form():
    x = surd_normalize(2, 2, 4, 8)
    assert (x.a, x.b, x.c, x.N) == (1, 2, 2, 2)  # sqrt(8) = 2*sqrt(2)
    y = surd_normalize(0, 1, -1, 53)
    assert (y.a, y.b, y.c, y.N) == (0, -1, 1, 53)
    z = surd_normalize(0, 3, 6, 5)
    assert (z.a, z.b, z.c, z.N) == (0, 1, 2, 5)


def test_normalize_rejections():
    with pytest.raises(ZeroDenominator):
        surd_normalize(1, 1, 0, 2)
    with pytest.raises(PerfectSquare):
        surd_normalize(1, 1, 1, 9)
    with pytest.raises(PerfectSquare):
        surd_normalize(1, 0, 1, 2)
    with pytest.raises(PerfectSquare):
        surd_normalize(1, 1, 1, 1)


def test_equality_is_value_equality():
    assert surd_normalize(2, 4, 6, 2) == surd_normalize(1, 2, 3, 2)
    assert surd_normalize(0, 1, 1, 2) != surd_normalize(0, 1, 1, 3)


def test_arithmetic_identities():
    r53 = surd_normalize(0, 1, 1, 53)
    inv = surd_normalize(0, 1, 53, 53)  # 1/sqrt(53)
    assert r53.inverse() == inv
    assert inv.inverse() == r53
    assert r53 * inv == Fraction(1)
    assert r53 * r53 == Fraction(53)
    phi = surd_normalize(1, 1, 2, 5)
    assert (phi - 1).inverse() == phi  # phi^2 = phi + 1
    assert phi + phi.conjugate() == Fraction(1)
    assert phi * phi.conjugate() == Fraction(-1)


def test_mixed_radicand_rejected():
    with pytest.raises(MixedRadicand):
        surd_normalize(0, 1, 1, 2) + surd_normalize(0, 1, 1, 3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        surd_arith(surd_normalize(0, 1, 1, 2), Fraction(0), "div")


def test_named_ops():
    x = surd_normalize(1, 1, 2, 5)
    y = surd_normalize(0, 1, 1, 5)
    assert surd_arith(x, y, "add") == x + y
    assert surd_arith(x, y, "sub") == x - y
    assert surd_arith(x, y, "mul") == x * y
    assert surd_arith(x, y, "div") == x / y
    assert surd_arith(x, None, "neg") == -x
    assert surd_arith(x, None, "inv") == x.inverse()


def test_comparisons():
    v1 = surd_normalize(636, 60, 371, 53)  # 2.89166...
    u4 = surd_normalize(-159, 54, 53, 53)  # 4.41747...
    assert surd_cmp(v1, u4) < 0
    assert surd_cmp(v1, v1) == 0
    assert surd_cmp(v1, Fraction(3)) < 0
    assert surd_cmp(u4, 4) > 0
    assert v1 < u4 and u4 > v1 and v1 <= v1 and v1 >= v1


def test_floor_ceil():
    inv53 = surd_normalize(0, 1, 53, 53)
    assert inv53.floor() == 0 and inv53.ceil() == 1
    r53 = surd_normalize(0, 1, 1, 53)
    assert r53.floor() == 7 and r53.ceil() == 8
    assert (-r53).floor() == -8 and (-r53).ceil() == -7
    assert surd_floor(Fraction(7, 2)) == 3
    assert surd_ceil(Fraction(7, 2)) == 4
    assert surd_floor(Fraction(-7, 2)) == -4
    assert surd_ceil(Fraction(-7, 2)) == -3


def test_to_decimal_truncates_toward_zero():
    assert to_decimal(surd_normalize(636, 60, 371, 53), 5) == "2.89166"
    assert to_decimal(surd_normalize(-2862, 60, 371, 53), 5) == "-6.53690"
    assert to_decimal(Fraction(1), 3) == "1.000"
    assert to_decimal(Fraction(-19, 7), 4) == "-2.7142"
    assert to_decimal(surd_normalize(0, 1, 1, 2), 6) == "1.414213"


def test_random_field_identities():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.choice([2, 3, 5, 7, 53])
        x = random_surd(rng, 60)
        x = surd_normalize(x.a, x.b, x.c, n)
        y = surd_normalize(rng.randrange(-9, 10), rng.choice([-2, -1, 1, 2]), rng.randrange(1, 9), n)
        assert (x + y) - y == x
        assert x * y == y * x
        assert (x * y) * x.inverse() == y
        assert x + (-x) == Fraction(0)
        r = Fraction(rng.randrange(-20, 21), rng.randrange(1, 11))
        assert (x + r) - r == x


def test_cmp_against_mpmath():
    rng = random.Random(23)
    for _ in range(250):
        x = random_surd(rng)
        y = rng.choice([random_surd(rng), Fraction(rng.randrange(-40, 41), rng.randrange(1, 20))])
        if isinstance(y, QuadSurd) and y.N != x.N:
            continue
        fx, fy = mpval(x), mpval(y)
        if abs(fx - fy) < mpmath.mpf("1e-40"):
            continue
        assert surd_cmp(x, y) == (1 if fx > fy else -1)


def test_floor_against_mpmath():
    rng = random.Random(37)
    for _ in range(250):
        x = random_surd(rng)
        f = x.floor()
        assert f == int(mpmath.floor(mpval(x)))
        assert surd_cmp(x, f) > 0
        assert surd_cmp(x, f + 1) < 0
        assert x.ceil() == f + 1
