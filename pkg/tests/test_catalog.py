"""Characteristic series catalog and genus evaluation."""

from fractions import Fraction

import pytest

from genera.catalog import (builtin_series, genus_logarithm,
                            genus_on_projective, ghrr_integrand,
                            hirzebruch_specialize, rescaled_series,
                            twisted_chi_y, unnormalize_invariance_check)
from genera.rings import MultiPoly, TruncSeries

Y = MultiPoly.var("y")


def chi_y_poly(n):
    out = MultiPoly.const(0)
    for i in range(n + 1):
        out = out + (-Y) ** i
    return out


def test_builtin_expansions():
    td = builtin_series("todd", 4).series
    assert list(td.coeffs) == [1, Fraction(1, 2), Fraction(1, 12), 0,
                               Fraction(-1, 720)]
    lg = builtin_series("lgenus", 4).series
    assert list(lg.coeffs) == [1, 0, Fraction(1, 3), 0, Fraction(-1, 45)]
    ch = builtin_series("chern", 4).series
    assert list(ch.coeffs) == [1, 1, 0, 0, 0]
    h1 = builtin_series("hirzebruch", 1).series
    assert h1[0] == MultiPoly.const(1)
    assert h1[1] == (1 - Y) * Fraction(1, 2)


def test_unknown_series_rejected():
    with pytest.raises(ValueError):
        builtin_series("elliptic")


def test_genus_values():
    h = builtin_series("hirzebruch", 8)
    for n in range(9):
        assert genus_on_projective(h, n) == chi_y_poly(n)
    lg = builtin_series("lgenus", 8)
    for n in range(9):
        assert genus_on_projective(lg, n) == (1 if n % 2 == 0 else 0)
    assert genus_on_projective(builtin_series("chern", 4), 3) == 4
    assert genus_on_projective(builtin_series("ahat", 4), 2) == \
        Fraction(-1, 8)


def test_genus_truncation_guard():
    with pytest.raises(ValueError):
        genus_on_projective(builtin_series("todd", 3), 5)


def test_genus_logarithm():
    g = genus_logarithm(builtin_series("todd", 6), 6)
    assert list(g.coeffs) == [0] + [Fraction(1, k) for k in range(1, 7)]
    g = genus_logarithm(builtin_series("lgenus", 6), 6)
    assert list(g.coeffs) == [0, 1, 0, Fraction(1, 3), 0, Fraction(1, 5), 0]
    # (1/(1+y)) log((1+yt)/(1-t)): check via series of the closed form
    order = 6
    g = genus_logarithm(builtin_series("hirzebruch", order), order)
    log_part = TruncSeries.zero("t", order)
    for k in range(1, order + 1):
        term = (MultiPoly.const(1) - (-Y) ** k) * Fraction(1, k)
        log_part = log_part + TruncSeries.from_coeffs(
            "t", [0] * k + [1], order) * term
    # multiply g by (1+y) and compare
    assert g.map_coeffs(lambda c: MultiPoly._coerce(c) * (1 + Y)) == \
        log_part.map_coeffs(MultiPoly._coerce)


def test_specializations():
    for y0, name in ((-1, "chern"), (0, "todd"), (1, "lgenus")):
        spec = hirzebruch_specialize(y0, 16)
        assert spec.series == builtin_series(name, 16).series


def test_unnormalized_rescaling_invariance():
    assert unnormalize_invariance_check(builtin_series("chern", 6), 2)
    assert unnormalize_invariance_check(builtin_series("todd", 6), 1)
    g = ghrr_integrand(6)
    assert g.series.constant_term() == 1 + Y
    assert unnormalize_invariance_check(g, 1 + Y, n_max=6)
    with pytest.raises(ValueError):
        unnormalize_invariance_check(builtin_series("todd", 4), 0)


def test_ghrr_integrand_genus_is_chi_y():
    g = ghrr_integrand(8)
    for n in range(7):
        assert genus_on_projective(g, n) == chi_y_poly(n)


def test_rescaled_series_shape():
    f = builtin_series("chern", 4)
    r = rescaled_series(f, 2)
    # (1 + 2z)/2 has constant term 1/2 and z-coefficient 1
    assert r.series[0] == Fraction(1, 2)
    assert r.series[1] == Fraction(1)


def test_twisted_chi_y():
    k = MultiPoly.var("k")
    assert twisted_chi_y(0, 5) == MultiPoly.const(1)
    t1 = twisted_chi_y(1, 3)
    assert t1.substitute("k", 0) == chi_y_poly(1)
    # chi(O(-2k)) + y*chi(O(-2-2k)) on the line
    assert t1 == 1 - Y - 2 * k - 2 * k * Y
    t2 = twisted_chi_y(2, 4)
    assert t2.substitute("k", 0) == chi_y_poly(2)
