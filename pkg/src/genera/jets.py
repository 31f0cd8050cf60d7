"""Brute-force jet-space oracle for motivic integrals of monomial
divisors on affine space.

Arcs on C^d are truncated to jets of order n; the locus where the divisor
E = sum a_i * {x_i = 0} has contact order exactly p is cut out by
vanishing/nonvanishing patterns on Taylor coefficients, and its class is
counted symbolically in L (a free coefficient contributes L, a
nonvanishing one L - 1).  The resulting measures are summed against L^-p
and compared with the closed-form stratum integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .k0 import K0Class, lefschetz
from .rings import MultiPoly, RationalFunction
from .stringy import ResolutionDatum, motivic_integral

MAX_DIM = 4
MAX_LEVEL = 64

L = MultiPoly.var("L")


@dataclass(frozen=True)
class JetSpec:
    """Monomial divisor sum a_i * {x_i = 0} on C^dimension, with jets
    truncated at the given order."""

    dimension: int
    exponents: tuple
    level: int = 24

    def __post_init__(self):
        if not 1 <= self.dimension <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        if not 0 <= self.level <= MAX_LEVEL:
            raise ValueError(f"truncation level must be in 0..{MAX_LEVEL}")
        if len(self.exponents) != self.dimension:
            raise ValueError("need one exponent per coordinate")
        if any(not isinstance(a, int) or a < 0 for a in self.exponents):
            raise ValueError("exponents must be nonnegative integers")


def jet_space_class(spec: JetSpec) -> MultiPoly:
    """[L_n(C^d)] = L^(d(n+1))."""
    return L ** (spec.dimension * (spec.level + 1))


def _coordinate_cell(order: int, n: int) -> MultiPoly:
    """Class in L_n(C) of the jets with contact order exactly ``order``
    along {x = 0}: the first ``order`` coefficients vanish, the next one
    does not, the remaining n - order are free."""
    return (L - 1) * L ** (n - order)


def cylinder_measure(spec: JetSpec, p: int) -> MultiPoly:
    """Measure of {ord(E) = p}: the class of the cut-out subset of the
    level-n jet space times L^(-n*d).  Stabilization requires n >= p."""
    if p < 0:
        raise ValueError("contact order must be nonnegative")
    n, d = spec.level, spec.dimension
    if n < p:
        raise ValueError(
            f"truncation level {n} too small for contact order {p} "
            f"(stabilization needs level >= order)")
    positive = [i for i in range(d) if spec.exponents[i] > 0]
    free_part = L ** ((n + 1) * (d - len(positive)))
    total = MultiPoly.const(0)
    # orders p_i <= p whenever a_i >= 1 and sum a_i p_i = p
    for orders in product(range(p + 1), repeat=len(positive)):
        if sum(spec.exponents[i] * o
               for i, o in zip(positive, orders)) != p:
            continue
        cell = free_part
        for o in orders:
            cell = cell * _coordinate_cell(o, n)
        total = total + cell
    return total * L ** (-n * d)


def partition_check(spec: JetSpec) -> bool:
    """The exact-contact-order cells (including the deeper-than-level
    remainder per coordinate) partition the jet space: measures add up
    to L^d."""
    n, d = spec.level, spec.dimension
    total = MultiPoly.const(0)
    # per-coordinate order in 0..n, or the all-zero remainder cell
    for orders in product(range(n + 2), repeat=d):
        cell = MultiPoly.const(1)
        for o in orders:
            cell = cell * (_coordinate_cell(o, n) if o <= n
                           else MultiPoly.const(1))
        total = total + cell
    return total * L ** (-n * d) == L ** d


def coordinate_datum(spec: JetSpec) -> ResolutionDatum:
    """The resolution datum of the identity map on C^d with boundary
    sum a_i * {x_i = 0}: components are the coordinate hyperplanes with
    positive exponent, open strata are tori times affine factors."""
    positive = [i for i in range(spec.dimension) if spec.exponents[i] > 0]
    m = len(positive)
    components = tuple(
        (f"H{i + 1}", Fraction(spec.exponents[i])) for i in positive)
    free = lefschetz(1) ** (spec.dimension - m) \
        if spec.dimension > m else K0Class.point()
    torus = lefschetz(1) - K0Class.point()
    strata = {}
    for mask in range(1 << m):
        subset = frozenset(i for i in range(m) if mask >> i & 1)
        cls = free
        for i in range(m - len(subset)):
            cls = cls * torus
        strata[subset] = cls
    return ResolutionDatum("arc", 1, components, strata)


def closed_integral(spec: JetSpec) -> RationalFunction:
    """Exact geometric-series summation of sum_p measure(p) * L^(-p):
    per coordinate, (L-1) L^(a+1) / (L^(a+1) - 1) when a > 0, else L."""
    out = RationalFunction(1)
    for a in spec.exponents:
        if a > 0:
            out = out * RationalFunction((L - 1) * L ** (a + 1),
                                         L ** (a + 1) - 1)
        else:
            out = out * RationalFunction(L)
    return out


def oracle_integral(spec: JetSpec, p_max: int):
    """(partial, closed, verdict): the truncated sum of cylinder measures
    against L^-p, the closed form, and agreement of the closed form with
    the stratum-sum motivic integral of the matching coordinate datum."""
    if p_max < 0:
        raise ValueError("p_max must be nonnegative")
    level = max(spec.level, p_max)
    working = JetSpec(spec.dimension, spec.exponents, level)
    partial = MultiPoly.const(0)
    for p in range(p_max + 1):
        partial = partial + cylinder_measure(working, p) * L ** (-p)
    closed = closed_integral(spec)
    stratum_sum = motivic_integral(coordinate_datum(spec))
    return partial, closed, closed == stratum_sum


def tail_bound_check(spec: JetSpec, p_max: int) -> bool:
    """partial + geometric tail equals the closed form exactly:
    the per-coordinate tails factor, so compare via the remainder of the
    one-variable series.  With all exponents zero the partial is already
    exact."""
    partial, closed, _ = oracle_integral(spec, p_max)
    # the difference must vanish at least like L^-(p_max+1); compare as a
    # single Laurent polynomial to avoid fraction normalization
    diff = partial * closed.denominator - closed.numerator
    if diff.is_zero():
        return True
    top = max(e[diff.vars.index("L")] for e in diff.terms)
    return top - closed.denominator.total_degree() <= -(p_max + 1)
