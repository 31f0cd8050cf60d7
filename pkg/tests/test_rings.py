"""Exact-arithmetic foundation: polynomials, series, rational functions."""

import random
from fractions import Fraction

import pytest

from genera.rings import (ExactDivisionError, MultiPoly, RationalFunction,
                          TruncSeries, binom_frac)

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
Z = MultiPoly.var("z")


def random_poly(rng, nvars=3, nterms=4, max_exp=3):
    names = ("x", "y", "z")[:nvars]
    out = MultiPoly.const(0)
    for _ in range(nterms):
        term = MultiPoly.const(Fraction(rng.randint(-9, 9),
                                        rng.randint(1, 9)))
        for name in names:
            term = term * MultiPoly.var(name) ** rng.randint(0, max_exp)
        out = out + term
    return out


def test_ring_laws_randomized():
    rng = random.Random(7)
    for _ in range(50):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_poly_basics():
    p = (X + Y) ** 2
    assert p == X ** 2 + 2 * X * Y + Y ** 2
    assert p.coefficient({"x": 1, "y": 1}) == 2
    assert (p - p).is_zero()
    assert MultiPoly.const(Fraction(3, 4)).constant_value() == Fraction(3, 4)
    assert p.substitute("y", 1) == X ** 2 + 2 * X + 1


def test_laurent_monomials():
    inv = X ** (-2)
    assert inv * X ** 2 == MultiPoly.const(1)
    assert (X ** (-1) + 1) * X == 1 + X


def test_div_exact():
    p = (X + Y) * (X - Y)
    assert p.div_exact(X + Y) == X - Y
    with pytest.raises(ExactDivisionError):
        (X + 1).div_exact(Y)


def test_laurent_div_exact():
    p = (1 + Y) * (X ** 2 - 3)
    assert p.laurent_div_exact(1 + Y) == X ** 2 - 3
    with pytest.raises(ExactDivisionError):
        (X + Y).laurent_div_exact(1 + Y)


def test_series_invert_examples():
    geom = TruncSeries.from_coeffs("z", [1, 1], 4).invert()
    assert list(geom.coeffs) == [1, -1, 1, -1, 1]
    todd = TruncSeries.from_coeffs(
        "z", [1, Fraction(1, 2), Fraction(1, 12)], 2)
    assert list(todd.invert().coeffs) == [1, Fraction(-1, 2), Fraction(1, 6)]
    half = TruncSeries.from_coeffs("z", [2], 3).invert()
    assert half.constant_term() == Fraction(1, 2)


def test_series_invert_involution():
    rng = random.Random(3)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(1, 5))] + [
            Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            for _ in range(6)]
        f = TruncSeries("z", 6, coeffs)
        assert f.invert().invert() == f


def test_series_compose_examples():
    order = 4
    expz = TruncSeries("z", order,
                       [Fraction(1, [1, 1, 2, 6, 24][k])
                        for k in range(order + 1)])
    ident = TruncSeries.from_coeffs("z", [0, 1], order)
    assert expz.compose(ident) == expz
    # z/(1 - e^-z) at 2z
    todd = TruncSeries("z", 2, [Fraction(1), Fraction(1, 2),
                                Fraction(1, 12)])
    double = TruncSeries.from_coeffs("z", [0, 2], 2)
    assert list(todd.compose(double).coeffs) == [1, 1, Fraction(1, 3)]
    # log(1+z) o (e^z - 1) = z
    log1p = TruncSeries("z", order, [Fraction(0)] + [
        Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)])
    em1 = expz - 1
    assert log1p.compose(em1) == ident


def test_series_compose_associative():
    order = 6
    f = TruncSeries.from_coeffs("z", [1, 2, 3, 4], order)
    g = TruncSeries.from_coeffs("z", [0, 1, 1], order)
    h = TruncSeries.from_coeffs("z", [0, 2, 0, 5], order)
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


def test_series_exp_log_roundtrip():
    f = TruncSeries.from_coeffs("z", [0, 1, Fraction(1, 3), 2], 8)
    assert f.exp().log() == f


def test_series_rejects_bad_input():
    f = TruncSeries.from_coeffs("z", [1, 1], 4)
    with pytest.raises(ValueError):
        f.compose(f)  # nonzero constant term
    zero_const = TruncSeries.from_coeffs("z", [0, 1], 4)
    with pytest.raises(Exception):
        zero_const.invert()


def test_rational_function_equality():
    a = RationalFunction(X ** 2 - 1, X - 1)
    b = RationalFunction(X + 1)
    assert a == b
    assert a + 1 == RationalFunction(X + 2)
    assert a * (X - 1) == RationalFunction(X ** 2 - 1)
    assert RationalFunction(1, X) + RationalFunction(X - 1, X) == 1
    with pytest.raises(ZeroDivisionError):
        RationalFunction(X, MultiPoly.const(0))


def test_binom_frac():
    assert binom_frac(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_frac(5, 2) == 10
    assert binom_frac(Fraction(3), 4) == 0
