"""Exact arithmetic foundation: multivariate polynomials, truncated power
series and rational functions over arbitrary-precision rationals.

All values are immutable; every operation returns a new object.  Rationals
are ``fractions.Fraction`` throughout, renormalized at every step, so
equality testing is always exact structural comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def binom_frac(a: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(a, k) for rational a."""
    a = as_fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= (a - i)
    return out / math.factorial(k)


class MultiPoly:
    """Multivariate polynomial with Fraction coefficients.

    Variables are kept sorted and unused variables are dropped, so two
    polynomials are equal iff their internal representations coincide.
    Exponents are normally nonnegative; negative exponents are tolerated
    structurally (Laurent extension, used for the Lefschetz variable).
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms):
        variables = tuple(variables)
        clean = {}
        for expo, coeff in terms.items():
            coeff = as_fraction(coeff)
            if coeff != 0:
                clean[tuple(expo)] = coeff
        # drop variables that never occur with a nonzero exponent
        used = [i for i in range(len(variables)) if any(e[i] for e in clean)]
        if len(used) != len(variables) or list(variables) != sorted(variables):
            names = sorted(variables[i] for i in used)
            index = {n: i for i, n in enumerate(names)}
            remapped = {}
            for expo, coeff in clean.items():
                new = [0] * len(names)
                for i in used:
                    new[index[variables[i]]] = expo[i]
                key = tuple(new)
                remapped[key] = remapped.get(key, Fraction(0)) + coeff
            clean = {e: c for e, c in remapped.items() if c != 0}
            variables = tuple(names)
        object.__setattr__(self, "vars", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = as_fraction(c)
        return cls((), {(): c} if c != 0 else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, powers: dict, coeff=1) -> "MultiPoly":
        names = tuple(sorted(powers))
        return cls(names, {tuple(powers[n] for n in names): as_fraction(coeff)})

    # -- helpers ------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiPoly.const(x)
        return None

    def _align(self, other):
        names = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(poly):
            idx = [names.index(v) for v in poly.vars]
            out = {}
            for expo, coeff in poly.terms.items():
                new = [0] * len(names)
                for i, e in zip(idx, expo):
                    new[i] = e
                out[tuple(new)] = coeff
            return out

        return names, remap(self), remap(other)

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        """The constant term (all exponents zero)."""
        if not self.vars:
            return self.terms.get((), Fraction(0))
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        names, a, b = self._align(other)
        for expo, coeff in b.items():
            a[expo] = a.get(expo, Fraction(0)) + coeff
        return MultiPoly(names, a)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        names, a, b = self._align(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division of polynomial by zero")
            return MultiPoly(self.vars, {e: c / q for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.div_exact(other)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.monomial_inverse() ** (-n)
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monomial_inverse(self) -> "MultiPoly":
        """Inverse of a single-term polynomial (Laurent)."""
        if len(self.terms) != 1:
            raise ExactDivisionError("only monomials are invertible")
        (expo, coeff), = self.terms.items()
        return MultiPoly(self.vars, {tuple(-e for e in expo): 1 / coeff})

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, tuple(sorted(self.terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- substitution -------------------------------------------------
    def substitute(self, name: str, value) -> "MultiPoly":
        """Substitute ``value`` (polynomial or scalar) for a variable."""
        if name not in self.vars:
            return self
        value = self._coerce(value)
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = MultiPoly.const(0)
        powers = {}

        def value_pow(k):
            if k not in powers:
                powers[k] = value ** k
            return powers[k]

        for expo, coeff in self.terms.items():
            mono = MultiPoly(rest, {expo[:i] + expo[i + 1:]: coeff})
            out = out + mono * value_pow(expo[i])
        return out

    def substitute_map(self, mapping: dict) -> "MultiPoly":
        out = self
        for name, value in mapping.items():
            out = out.substitute(name, value)
        return out

    def coefficients_in(self, name: str) -> dict:
        """Split into {power: polynomial in the remaining variables}."""
        if name not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets = {}
        for expo, coeff in self.terms.items():
            buckets.setdefault(expo[i], {})[expo[:i] + expo[i + 1:]] = coeff
        return {p: MultiPoly(rest, t) for p, t in buckets.items()}

    def coefficient(self, powers: dict) -> "MultiPoly":
        """Coefficient of a monomial in the named variables."""
        out = self
        for name, p in powers.items():
            out = out.coefficients_in(name).get(p, MultiPoly.const(0))
        return out

    # -- division -----------------------------------------------------
    def _lead(self):
        # graded lex leading term
        expo = max(self.terms, key=lambda e: (sum(e), e))
        return expo, self.terms[expo]

    def div_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division; raises ExactDivisionError on a remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division of polynomial by zero")
        if any(e < 0 for expo in list(self.terms) + list(divisor.terms) for e in expo):
            raise ExactDivisionError("exact division needs nonnegative exponents")
        names, rem, div = self._align(divisor)
        dl_expo = max(div, key=lambda e: (sum(e), e))
        dl_coeff = div[dl_expo]
        quot = {}
        while rem:
            r_expo = max(rem, key=lambda e: (sum(e), e))
            r_coeff = rem[r_expo]
            q_expo = tuple(x - y for x, y in zip(r_expo, dl_expo))
            if any(e < 0 for e in q_expo):
                raise ExactDivisionError("nonzero remainder in exact division")
            q_coeff = r_coeff / dl_coeff
            quot[q_expo] = quot.get(q_expo, Fraction(0)) + q_coeff
            for d_expo, d_coeff in div.items():
                key = tuple(x + y for x, y in zip(q_expo, d_expo))
                val = rem.get(key, Fraction(0)) - q_coeff * d_coeff
                if val == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = val
        return MultiPoly(names, quot)

    def laurent_div_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact division allowing negative exponents in the dividend."""
        shift = {}
        for expo in self.terms:
            for name, e in zip(self.vars, expo):
                if e < 0:
                    shift[name] = max(shift.get(name, 0), -e)
        if not shift:
            return self.div_exact(divisor)
        mono = MultiPoly.monomial(shift)
        lifted = (self * mono).div_exact(divisor)
        return lifted * mono.monomial_inverse()

    # -- content / gcd (univariate only) ------------------------------
    def content_normalized(self):
        """(unit, primitive) with primitive having integer content 1 and
        positive leading coefficient in graded lex order."""
        if self.is_zero():
            return Fraction(1), self
        coeffs = list(self.terms.values())
        num_gcd = math.gcd(*(abs(c.numerator) for c in coeffs))
        den_lcm = math.lcm(*(c.denominator for c in coeffs))
        unit = Fraction(num_gcd, den_lcm)
        if self._lead()[1] < 0:
            unit = -unit
        return unit, self / unit

    def gcd_univariate(self, other: "MultiPoly"):
        """Monic gcd when both polynomials involve the same single variable
        (or are constant); returns None when not applicable."""
        names = set(self.vars) | set(other.vars)
        if len(names) > 1:
            return None
        if self.is_zero():
            return other.content_normalized()[1]
        if other.is_zero():
            return self.content_normalized()[1]
        if not names:
            return MultiPoly.const(1)
        if any(e < 0 for p in (self, other) for expo in p.terms for e in expo):
            return None
        name = names.pop()

        def to_list(p):
            d = p.degree_in(name)
            cs = [Fraction(0)] * (d + 1)
            for expo, coeff in p.terms.items():
                cs[expo[0] if p.vars else 0] = coeff
            return cs

        a, b = to_list(self), to_list(other)

        def strip(c):
            while c and c[-1] == 0:
                c.pop()
            return c

        a, b = strip(a[:]), strip(b[:])
        while b:
            # a mod b
            while len(a) >= len(b):
                f = a[-1] / b[-1]
                off = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[off + i] -= f * bc
                strip(a)
                if not a:
                    break
            a, b = b, a
        if not a:
            return MultiPoly.const(1)
        lead = a[-1]
        poly = MultiPoly.const(0)
        for i, c in enumerate(a):
            if c:
                poly = poly + MultiPoly.monomial({name: i}, c / lead)
        return poly

    # -- serialization ------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))
        parts = []
        for expo, coeff in items:
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, expo)
                if e != 0
            )
            if not mono:
                body = _frac_str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{_frac_str(abs(coeff))}*{mono}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    def __repr__(self):
        return f"MultiPoly({self})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------
# coefficient-ring glue shared by TruncSeries / RationalFunction

def coeff_zero():
    return Fraction(0)


def coeff_inverse(c):
    """Multiplicative inverse of a unit coefficient."""
    if isinstance(c, (int, Fraction)):
        if c == 0:
            raise ZeroDivisionError("zero is not a unit")
        return 1 / as_fraction(c)
    if isinstance(c, MultiPoly):
        if c.is_constant():
            return MultiPoly.const(coeff_inverse(c.constant_value()))
        if len(c.terms) == 1:
            return c.monomial_inverse()
        raise ExactDivisionError(f"constant term {c} is not a unit")
    if isinstance(c, RationalFunction):
        return c.reciprocal()
    raise TypeError(f"no inverse for {c!r}")


class TruncSeries:
    """Truncated univariate formal power series, exact through z^order.

    Coefficients may be Fractions, MultiPolys or RationalFunctions; all
    arithmetic is truncated at the stored order and never reads beyond it.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError("coefficient list must have length order + 1")
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_coeffs(cls, var, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        coeffs += [coeff_zero()] * (order + 1 - len(coeffs))
        return cls(var, order, coeffs[: order + 1])

    @classmethod
    def zero(cls, var, order):
        return cls(var, order, [coeff_zero()] * (order + 1))

    @classmethod
    def one(cls, var, order):
        return cls.from_coeffs(var, [Fraction(1)], order)

    @classmethod
    def identity(cls, var, order):
        return cls.from_coeffs(var, [Fraction(0), Fraction(1)], order)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def constant_term(self):
        return self.coeffs[0]

    def truncate(self, order: int) -> "TruncSeries":
        if order <= self.order:
            return TruncSeries(self.var, order, self.coeffs[: order + 1])
        return TruncSeries(self.var, order,
                           list(self.coeffs) + [coeff_zero()] * (order - self.order))

    def map_coeffs(self, fn) -> "TruncSeries":
        return TruncSeries(self.var, self.order, [fn(c) for c in self.coeffs])

    def _check(self, other):
        if self.var != other.var or self.order != other.order:
            raise ValueError("series must share variable and truncation order")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return TruncSeries(self.var, self.order, cs)
        self._check(other)
        return TruncSeries(self.var, self.order,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly, RationalFunction)):
            return self.map_coeffs(lambda c: c * other)
        self._check(other)
        out = [coeff_zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if isinstance(a, (int, Fraction)) and a == 0:
                continue
            for j in range(self.order + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncSeries(self.var, self.order, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.var != other.var or self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        out = TruncSeries.one(self.var, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Substitute ``inner`` (zero constant term) into this series."""
        self._check(inner)
        if not _is_zero_coeff(inner.coeffs[0]):
            raise ValueError("inner series must have zero constant term")
        out = TruncSeries.from_coeffs(self.var, [self.coeffs[0]], self.order)
        power = TruncSeries.one(self.var, self.order)
        for k in range(1, self.order + 1):
            power = power * inner
            out = out + power * self.coeffs[k]
        return out

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        inv0 = coeff_inverse(self.coeffs[0])
        out = [inv0] + [coeff_zero()] * self.order
        for n in range(1, self.order + 1):
            acc = coeff_zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -(inv0 * acc)
        return TruncSeries(self.var, self.order, out)

    def exp(self) -> "TruncSeries":
        if not _is_zero_coeff(self.coeffs[0]):
            raise ValueError("exp needs zero constant term")
        out = TruncSeries.one(self.var, self.order)
        power = TruncSeries.one(self.var, self.order)
        fact = 1
        for k in range(1, self.order + 1):
            power = power * self
            fact *= k
            out = out + power * Fraction(1, fact)
        return out

    def log(self) -> "TruncSeries":
        if not self.coeffs[0] == 1:
            raise ValueError("log needs constant term 1")
        u = self - 1
        out = TruncSeries.zero(self.var, self.order)
        power = TruncSeries.one(self.var, self.order)
        for k in range(1, self.order + 1):
            power = power * u
            out = out + power * Fraction((-1) ** (k + 1), k)
        return out

    def scale_variable(self, a) -> "TruncSeries":
        """Substitute z -> a*z, with a a coefficient-ring element."""
        cs = []
        power = 1
        for k, c in enumerate(self.coeffs):
            cs.append(c * power if k else c)
            power = power * a
        return TruncSeries(self.var, self.order, cs)

    def evaluate(self, value):
        """Evaluate at a nilpotent/truncating ring element via Horner."""
        out = self.coeffs[self.order]
        for k in range(self.order - 1, -1, -1):
            out = out * value + self.coeffs[k]
        return out

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero_coeff(c):
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            cs = str(c) if not isinstance(c, Fraction) else _frac_str(c)
            if "+" in cs or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono and cs != "1" else (mono or cs))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncSeries[{self.var}; O({self.var}^{self.order + 1})]({self})"


def _is_zero_coeff(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    if isinstance(c, MultiPoly):
        return c.is_zero()
    if isinstance(c, RationalFunction):
        return c.numerator.is_zero()
    return False


class RationalFunction:
    """Quotient of MultiPolys, normalized by content/sign and by the monic
    gcd whenever numerator and denominator are univariate in one shared
    variable.  Equality falls back to cross-multiplication, so values are
    well defined even when full gcd reduction is unavailable.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=1):
        numerator = _to_poly(numerator)
        denominator = _to_poly(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = numerator.gcd_univariate(denominator)
        if g is not None and not g.is_constant():
            numerator = numerator.div_exact(g)
            denominator = denominator.div_exact(g)
        unit, denominator = denominator.content_normalized()
        numerator = numerator / unit
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, MultiPoly)):
            return RationalFunction(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def reciprocal(self):
        return RationalFunction(self.denominator, self.numerator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def is_polynomial(self) -> bool:
        return self.denominator.is_constant()

    def as_polynomial(self) -> MultiPoly:
        return self.numerator.laurent_div_exact(self.denominator)

    def substitute(self, name, value) -> "RationalFunction":
        return RationalFunction(self.numerator.substitute(name, value),
                                self.denominator.substitute(name, value))

    def __str__(self):
        if self.denominator == MultiPoly.const(1):
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _to_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")
