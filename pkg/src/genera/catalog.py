"""Catalog of characteristic power series and genus evaluation on
projective spaces.

The computational rule is: the genus attached to a power series f with
unit constant term a takes the value [z^n] f(z)^(n+1) / a on the
n-dimensional projective space.  For normalized f (a = 1) this is the
usual coefficient extraction; the division by a is exactly what makes the
value invariant under the rescaling f(z) -> f(az)/a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import ExactDivisionError, MultiPoly, TruncSeries

Y = MultiPoly.var("y")

SERIES_NAMES = ("chern", "todd", "lgenus", "ahat", "hirzebruch")


@dataclass(frozen=True)
class CharSeries:
    """A characteristic power series f(z) with unit constant term."""

    name: str
    series: TruncSeries
    normalized: bool = True


def _todd_series(order: int) -> TruncSeries:
    # z / (1 - e^{-z}) = 1 / sum_{k>=0} (-1)^k z^k / (k+1)!
    fact = 1
    coeffs = []
    for k in range(order + 1):
        fact *= (k + 1)
        coeffs.append(Fraction((-1) ** k, fact))
    return TruncSeries("z", order, coeffs).invert()


def _lgenus_series(order: int) -> TruncSeries:
    # z / tanh z = cosh z / (sinh z / z)
    sinh_over_z = [Fraction(0)] * (order + 1)
    cosh = [Fraction(0)] * (order + 1)
    fact = 1
    for k in range(order + 1):
        if k:
            fact *= k
        if k % 2 == 0:
            cosh[k] = Fraction(1, fact)
            sinh_over_z[k] = Fraction(1, fact * (k + 1))
    return (TruncSeries("z", order, cosh)
            * TruncSeries("z", order, sinh_over_z).invert())


def _ahat_series(order: int) -> TruncSeries:
    # z / (2 sinh(z/2)) = 1 / (sum_{k even} (z/2)^k / (k+1)!)
    coeffs = [Fraction(0)] * (order + 1)
    fact = 1
    for k in range(order + 1):
        if k:
            fact *= k
        if k % 2 == 0:
            coeffs[k] = Fraction(1, fact * (k + 1) * 2 ** k)
    return TruncSeries("z", order, coeffs).invert()


def _hirzebruch_series(order: int) -> TruncSeries:
    # f_y(z) = z(1+y) / (1 - e^{-z(1+y)}) - z*y
    todd = _todd_series(order)
    scaled = todd.scale_variable(1 + Y)  # w -> z(1+y)
    cs = list(scaled.coeffs)
    if order >= 1:
        cs[1] = cs[1] - Y
    return TruncSeries("z", order, [MultiPoly._coerce(c) or MultiPoly.const(c)
                                    for c in cs])


def builtin_series(name: str, order: int = 16) -> CharSeries:
    """Named characteristic series, exact through z^order."""
    if name == "chern":
        return CharSeries("chern", TruncSeries.from_coeffs(
            "z", [Fraction(1), Fraction(1)], order))
    if name == "todd":
        return CharSeries("todd", _todd_series(order))
    if name == "lgenus":
        return CharSeries("lgenus", _lgenus_series(order))
    if name == "ahat":
        return CharSeries("ahat", _ahat_series(order))
    if name == "hirzebruch":
        return CharSeries("hirzebruch", _hirzebruch_series(order))
    raise ValueError(f"unknown series {name!r}; choose from {SERIES_NAMES}")


def _unit_divide(value, a):
    """Divide a coefficient by the unit a (exact polynomial division when
    a is a nonconstant polynomial such as 1 + y)."""
    if isinstance(a, (int, Fraction)) or a.is_constant():
        scalar = a if isinstance(a, (int, Fraction)) else a.constant_value()
        if scalar == 0:
            raise ExactDivisionError("constant term is not a unit")
        return value / scalar
    value = MultiPoly._coerce(value)
    return value.laurent_div_exact(a)


def genus_on_projective(f: CharSeries, n: int):
    """Value of the genus of f on n-dimensional projective space."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > f.series.order:
        raise ValueError(
            f"series order {f.series.order} too small; need at least {n}")
    coeff = (f.series ** (n + 1))[n]
    a = f.series.constant_term()
    if f.normalized and a == 1:
        return coeff
    return _unit_divide(coeff, a)


def genus_logarithm(f: CharSeries, order: int) -> TruncSeries:
    """g(t) = sum_i Phi_f(P^i) t^(i+1)/(i+1), through t^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [Fraction(0)]
    for i in range(order):
        coeffs.append(genus_on_projective(f, i) * Fraction(1, i + 1))
    return TruncSeries("t", order, coeffs)


def hirzebruch_specialize(y0, order: int = 16) -> CharSeries:
    """The Hirzebruch series with y specialized to the rational y0."""
    y0 = Fraction(y0)
    h = _hirzebruch_series(order)

    def subst(c):
        c = MultiPoly._coerce(c)
        return c.substitute("y", y0).constant_value()

    return CharSeries(f"hirzebruch[y={y0}]", h.map_coeffs(subst))


def rescaled_series(f: CharSeries, a) -> CharSeries:
    """f(az)/a for a unit a: coefficient c_k goes to c_k * a^(k-1)."""
    coeffs = []
    for k, c in enumerate(f.series.coeffs):
        if k == 0:
            coeffs.append(_unit_divide(c, a) if not (
                isinstance(a, (int, Fraction)) and a == 1) else c)
        else:
            p = MultiPoly.const(1)
            for _ in range(k - 1):
                p = p * a
            coeffs.append(c * p)
    return CharSeries(f"{f.name}.rescaled", TruncSeries(
        f.series.var, f.series.order, coeffs), normalized=False)


def unnormalize_invariance_check(f: CharSeries, a, n_max: int | None = None) -> bool:
    """True iff f and f(az)/a induce the same genus for all n up to the
    truncation bound (the rescaling rule for non-normalized series)."""
    if isinstance(a, (int, Fraction)):
        if a == 0:
            raise ValueError("a must be a unit")
    elif a.is_constant() and a.constant_value() == 0:
        raise ValueError("a must be a unit")
    g = rescaled_series(f, a)
    bound = f.series.order if n_max is None else n_max
    return all(genus_on_projective(f, n) == genus_on_projective(g, n)
               for n in range(bound + 1))


def ghrr_integrand(order: int) -> CharSeries:
    """(1 + y e^{-z}) * z/(1 - e^{-z}): the non-normalized series whose
    genus is chi_y; its constant term is 1 + y."""
    # e^{-z}
    fact = 1
    em = [Fraction(1)]
    for k in range(1, order + 1):
        fact *= k
        em.append(Fraction((-1) ** k, fact))
    emz = TruncSeries("z", order, em)
    series = (emz * Y + 1) * _todd_series(order)
    return CharSeries("ghrr-integrand", series, normalized=False)


def twisted_chi_y(n: int, k_order: int) -> MultiPoly:
    """Twisted chi_y genus of P^n: the integral of
    e^{-k c1(T)} ch(Lambda_y T^*) td(T), as a polynomial in y truncated in
    the formal twist variable k at k_order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    order = n
    f = ghrr_integrand(order).series  # (1+y e^{-z}) z/(1-e^{-z})
    kvar = MultiPoly.var("k")
    # e^{-k(n+1)z} truncated in z (k degree grows with z degree)
    fact = 1
    ek = [MultiPoly.const(1)]
    for j in range(1, order + 1):
        fact *= j
        ek.append((kvar * (-(n + 1))) ** j * Fraction(1, fact))
    expk = TruncSeries("z", order, ek)
    total = expk * (f ** (n + 1))
    top = MultiPoly._coerce(total[n])
    value = top.laurent_div_exact(1 + Y) if n >= 0 else top
    # truncate in k
    kept = {e: c for e, c in value.terms.items()
            if ("k" not in value.vars
                or e[value.vars.index("k")] <= k_order)}
    return MultiPoly(value.vars, kept)
