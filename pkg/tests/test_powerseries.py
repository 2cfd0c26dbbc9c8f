import random
from fractions import Fraction

import pytest

from heavylight.powerseries import FormalPS1, FormalPS2, compose_ps1_into_ps2
from heavylight.uvpoly import UVPoly


def const_series(values, var="y"):
    return FormalPS1(var, [UVPoly.const(Fraction(v)) for v in values], len(values) - 1)


def test_exp_small():
    y = FormalPS1.identity("y", 3)
    e = y.exp()
    assert e == const_series([1, 1, Fraction(1, 2), Fraction(1, 6)])


def test_log_small():
    one_minus_y = const_series([1, -1, 0, 0])
    assert one_minus_y.log() == const_series([0, -1, Fraction(-1, 2), Fraction(-1, 3)])


def test_log_coefficient_example():
    # y^2 coefficient of -log(1-y)/2 is 1/4
    one_minus_y = const_series([1, -1, 0, 0])
    f = one_minus_y.log() * Fraction(-1, 2)
    assert f[2] == UVPoly.const(Fraction(1, 4))


def test_compose():
    y = FormalPS1.identity("y", 4)
    inner = y + y * y
    outer = y.exp()
    direct = inner.exp()
    assert outer.compose(inner) == direct
    with pytest.raises(ValueError):
        outer.compose(y + 1)


def test_exp_log_round_trip_random():
    rng = random.Random(3)
    for _ in range(20):
        coeffs = [UVPoly.zero()] + [
            UVPoly.const(Fraction(rng.randint(-3, 3), rng.choice([1, 2])))
            for _ in range(6)
        ]
        f = FormalPS1("y", coeffs, 6)
        assert f.exp().log() == f
        one_plus = f + UVPoly.one()
        assert one_plus.log().exp() == one_plus


def test_reversion():
    y = FormalPS1.identity("y", 6)
    f = y.exp() - 1
    g = f.reversion()
    # inverse of e^y - 1 is log(1+y)
    expected = (y + 1).log()
    assert g == expected
    assert f.compose(g) == y and g.compose(f) == y


def test_derivative():
    f = const_series([5, 1, Fraction(1, 2), Fraction(1, 6)])
    assert f.derivative() == const_series([1, 1, Fraction(1, 2)])


def test_ps2_multiplication_and_truncation():
    x = FormalPS2.variable(("x", "y"), 1, 3)
    y = FormalPS2.variable(("x", "y"), 2, 3)
    f = (x + y) * (x + y)
    assert f[(2, 0)] == UVPoly.one()
    assert f[(1, 1)] == UVPoly.const(2)
    g = f * f
    assert g.order == 3
    assert all(i + j <= 3 for (i, j) in g.coeffs)


def test_compose_ps1_into_ps2():
    # substitute x -> x + y into e^x
    e = FormalPS1.identity("x", 4).exp()
    w = FormalPS2.variable(("x", "y"), 1, 4) + FormalPS2.variable(("x", "y"), 2, 4)
    out = compose_ps1_into_ps2(e, w)
    from math import comb, factorial

    for i in range(5):
        for j in range(5 - i):
            assert out[(i, j)] == UVPoly.const(
                Fraction(comb(i + j, i), factorial(i + j))
            )
    with pytest.raises(ValueError):
        compose_ps1_into_ps2(e, w + 1)
