"""Cohomology-ring models of products of projective spaces, integration by
top-coefficient extraction, and HRR / generalized-HRR verification.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .catalog import CharSeries, builtin_series, ghrr_integrand
from .graded import GradedRing
from .rings import MultiPoly, TruncSeries

Y = MultiPoly.var("y")


class ProjSpaceRing(GradedRing):
    """Truncated ring Q[y][h_1..h_m] / (h_j^{n_j + 1}) for a product of
    projective spaces of the given dimensions."""

    def __init__(self, factors):
        factors = tuple(int(n) for n in factors)
        if any(n < 0 for n in factors):
            raise ValueError("dimensions must be nonnegative")
        self.factors = factors
        names = tuple(f"h{j + 1}" for j in range(len(factors))) \
            if len(factors) > 1 else ("h",) * len(factors)
        self.hyperplanes = names
        super().__init__({n: 1 for n in names}, sum(factors),
                         dict(zip(names, factors)))

    def h(self, j: int = 0) -> MultiPoly:
        return MultiPoly.var(self.hyperplanes[j])

    def integrate(self, elt) -> MultiPoly:
        """Coefficient of the top monomial h_1^{n_1} ... h_m^{n_m}."""
        elt = self.reduce(MultiPoly._coerce(elt))
        return elt.coefficient(dict(zip(self.hyperplanes, self.factors)))

    def tangent_class(self, f: CharSeries) -> MultiPoly:
        """prod_j f(h_j)^{n_j + 1}: the multiplicative class of the tangent
        bundle (Euler sequence: TP^n + 1 = O(1)^{n+1})."""
        out = MultiPoly.const(1)
        for j, n in enumerate(self.factors):
            val = self.reduce(MultiPoly._coerce(f.series.evaluate(self.h(j))))
            for _ in range(n + 1):
                out = self.reduce(out * val)
        return out


def integrate(ring: ProjSpaceRing, elt) -> MultiPoly:
    return ring.integrate(elt)


def tangent_class(ring: ProjSpaceRing, f: CharSeries) -> MultiPoly:
    return ring.tangent_class(f)


def count_monomials(n_vars: int, degree: int) -> int:
    """Dimension of the space of degree-d monomials in n_vars variables,
    by direct enumeration (the sheaf-cohomology oracle for O(d) on P^n)."""
    return sum(1 for _ in combinations_with_replacement(range(n_vars), degree))


def hrr_check(n: int, d: int):
    """(lhs, rhs, equal): holomorphic Euler characteristic of O(d) on P^n
    vs the Todd-class integral."""
    if n < 0 or d < 0:
        raise ValueError("need n >= 0 and d >= 0")
    lhs = Fraction(count_monomials(n + 1, d))
    ring = ProjSpaceRing([n])
    todd = builtin_series("todd", order=max(n, 1))
    h = ring.h()
    ch_line = ring.exp_nilpotent(h * d) if n else MultiPoly.const(1)
    rhs_poly = ring.integrate(ch_line * ring.tangent_class(todd))
    rhs = rhs_poly.constant_value()
    return lhs, rhs, lhs == rhs


def ghrr_normalization_check(order: int, drop_linear_term: bool = False) -> bool:
    """Verify (1 + y e^{-z(1+y)})/(1+y) * z/(1 - e^{-z(1+y)})
    = z(1+y)/(1 - e^{-z(1+y)}) - z*y as series over Q[y] through z^order.

    ``drop_linear_term`` removes the -z*y term from the right side (a
    deliberate negative control)."""
    if order < 2:
        raise ValueError("order must be >= 2")
    unnorm = ghrr_integrand(order).series.scale_variable(1 + Y)
    lhs_cs = []
    for c in unnorm.coeffs:
        lhs_cs.append(MultiPoly._coerce(c).laurent_div_exact(1 + Y))
    lhs = TruncSeries("z", order, lhs_cs)

    rhs = builtin_series("hirzebruch", order).series
    if drop_linear_term:
        cs = list(rhs.coeffs)
        cs[1] = cs[1] + Y
        rhs = TruncSeries("z", order, cs)
    return lhs == rhs


def ty_class_degree(n: int) -> MultiPoly:
    """Degree of the Hirzebruch class of P^n: the integral of the modified
    Todd class of the tangent bundle (equals chi_y of P^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ring = ProjSpaceRing([n])
    f = builtin_series("hirzebruch", order=max(n, 1))
    return ring.integrate(ring.tangent_class(f))
