"""Jet-space counting oracle for monomial divisors."""

from itertools import product

import pytest

from genera.jets import (JetSpec, closed_integral, coordinate_datum,
                         cylinder_measure, jet_space_class, oracle_integral,
                         partition_check, tail_bound_check)
from genera.rings import MultiPoly, RationalFunction

L = MultiPoly.var("L")


def test_jet_space_class():
    assert jet_space_class(JetSpec(1, (1,), 0)) == L
    assert jet_space_class(JetSpec(2, (1, 1), 1)) == L ** 4
    assert jet_space_class(JetSpec(1, (1,), 3)) == L ** 4


def test_spec_validation():
    with pytest.raises(ValueError):
        JetSpec(5, (1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        JetSpec(1, (1,), 100)
    with pytest.raises(ValueError):
        JetSpec(2, (1,))
    with pytest.raises(ValueError):
        JetSpec(1, (-1,))


def test_cylinder_measure_examples():
    spec = JetSpec(1, (1,), 8)
    assert cylinder_measure(spec, 2) == (L - 1) * L ** (-2)
    zero = JetSpec(1, (0,), 8)
    assert cylinder_measure(zero, 0) == L
    assert cylinder_measure(zero, 3) == MultiPoly.const(0)
    diag = JetSpec(2, (1, 1), 8)
    assert cylinder_measure(diag, 1) == 2 * (L - 1) ** 2 * L ** (-1)


def test_stabilization():
    for level in (5, 9, 17):
        spec = JetSpec(2, (2, 1), level)
        assert cylinder_measure(spec, 4) == \
            cylinder_measure(JetSpec(2, (2, 1), 4), 4)
    with pytest.raises(ValueError):
        cylinder_measure(JetSpec(1, (1,), 2), 5)


def test_closed_form_examples():
    assert closed_integral(JetSpec(1, (1,), 4)) == \
        RationalFunction(L ** 2, L + 1)
    assert closed_integral(JetSpec(1, (0,), 4)) == RationalFunction(L)
    # Fubini: d = 2, a = (1, 0)
    assert closed_integral(JetSpec(2, (1, 0), 4)) == \
        RationalFunction(L ** 3, L + 1)


def test_oracle_verdicts():
    for d in (1, 2):
        for exponents in product((0, 1, 2, 3), repeat=d):
            spec = JetSpec(d, exponents, 24)
            partial, closed, verdict = oracle_integral(spec, 24)
            assert verdict, (d, exponents)
            assert tail_bound_check(spec, 24), (d, exponents)


def test_total_measure_partition():
    for d in (1, 2):
        for exponents in product((0, 1, 2), repeat=d):
            assert partition_check(JetSpec(d, exponents, 6))


def test_coordinate_datum_shape():
    datum = coordinate_datum(JetSpec(2, (1, 0), 4))
    assert len(datum.components) == 1
    from genera.k0 import euler_of_class
    total = datum.total_class()
    # [C^2] has chi = 1
    assert euler_of_class(total) == 1
