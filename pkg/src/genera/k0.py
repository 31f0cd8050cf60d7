"""Grothendieck ring of varieties modelled by atoms with E-polynomials,
relative classes and constructible functions over finite stratified bases,
and proalgebraic towers.

A variety enters only through its class: an atom is a (name, dimension,
E-polynomial) triple and nothing else.  Maps have constant fibers per
stratum pair; refine the stratification to encode anything else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .rings import MultiPoly

U = MultiPoly.var("u")
V = MultiPoly.var("v")


class ValidationError(ValueError):
    """Input data violating a structural invariant."""


@dataclass(frozen=True)
class Atom:
    """A variety atom: dimension and Hodge-Deligne E-polynomial in u, v."""

    name: str
    dim: int
    e_poly: MultiPoly

    def __post_init__(self):
        if self.dim < 0:
            raise ValidationError("atom dimension must be nonnegative")
        if self.e_poly.total_degree() > 2 * self.dim:
            raise ValidationError(
                f"E-polynomial degree exceeds 2*dim for atom {self.name!r}")

    def __hash__(self):
        return hash((self.name, self.dim))

    def __eq__(self, other):
        if not isinstance(other, Atom):
            return NotImplemented
        return self.name == other.name and self.dim == other.dim


LEFSCHETZ = Atom("L", 1, U * V)


class K0Class:
    """Integer combination of commutative atom-monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        clean = {}
        for mono, coeff in terms.items():
            mono = tuple(sorted(((a, e) for a, e in mono if e),
                                key=lambda t: t[0].name))
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def zero(cls) -> "K0Class":
        return cls({})

    @classmethod
    def point(cls, coeff: int = 1) -> "K0Class":
        return cls({(): coeff})

    @classmethod
    def atom(cls, a: Atom, power: int = 1, coeff: int = 1) -> "K0Class":
        return cls({((a, power),): coeff})

    @staticmethod
    def _coerce(x):
        if isinstance(x, K0Class):
            return x
        if isinstance(x, int):
            return K0Class.point(x)
        if isinstance(x, Atom):
            return K0Class.atom(x)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return K0Class(out)

    __radd__ = __add__

    def __neg__(self):
        return K0Class({m: -c for m, c in self.terms.items()})

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
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                powers = {}
                for a, e in m1 + m2:
                    powers[a] = powers.get(a, 0) + e
                key = tuple(sorted(powers.items(), key=lambda t: t[0].name))
                out[key] = out.get(key, 0) + c1 * c2
        return K0Class(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in K0")
        out = K0Class.point()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: str(t[0]))))

    def is_zero(self) -> bool:
        return not self.terms

    def atoms(self):
        return {a for mono in self.terms for a, _ in mono}

    def map_atoms(self, fn) -> MultiPoly:
        """Ring morphism determined by atom -> MultiPoly."""
        out = MultiPoly.const(0)
        for mono, coeff in self.terms.items():
            part = MultiPoly.const(coeff)
            for a, e in mono:
                part = part * fn(a) ** e
            out = out + part
        return out

    def divide_monomial(self, other: "K0Class", power: int):
        """Cancel other^power when other is a single atom-monomial dividing
        every term; returns (reduced, remaining_power)."""
        if power == 0 or self.is_zero():
            return self, 0
        if len(other.terms) != 1:
            return self, power
        (mono, coeff), = other.terms.items()
        if coeff != 1:
            return self, power
        divisor = dict(mono)
        k = power
        for m, _ in self.terms.items():
            have = dict(m)
            for a, e in divisor.items():
                avail = have.get(a, 0) // e
                k = min(k, avail)
        if k == 0:
            return self, power
        out = {}
        for m, c in self.terms.items():
            have = dict(m)
            for a, e in divisor.items():
                have[a] = have.get(a, 0) - e * k
            out[tuple(sorted(have.items(), key=lambda t: t[0].name))] = c
        return K0Class(out), power - k

    def __str__(self):
        if not self.terms:
            return "0"
        def mono_str(m):
            return "*".join(a.name if e == 1 else f"{a.name}^{e}" for a, e in m)
        items = sorted(self.terms.items(),
                       key=lambda t: (sum(e for _, e in t[0]), mono_str(t[0])))
        parts = []
        for mono, coeff in items:
            ms = mono_str(mono)
            if not ms:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = ms
            else:
                body = f"{abs(coeff)}*{ms}"
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return "-" + text[2:] if text.startswith("- ") else text[2:]

    __repr__ = __str__


def lefschetz(power: int = 1) -> K0Class:
    return K0Class.atom(LEFSCHETZ, power)


def projective_space_class(n: int) -> K0Class:
    """[P^n] = 1 + L + ... + L^n (cell decomposition)."""
    out = K0Class.point()
    for i in range(1, n + 1):
        out = out + lefschetz(i)
    return out


def poly_to_class(poly: MultiPoly, atoms: dict) -> K0Class:
    """Interpret a polynomial in atom names as a K0 class."""
    out = K0Class.zero()
    for expo, coeff in poly.terms.items():
        if coeff.denominator != 1:
            raise ValidationError("K0 classes have integer coefficients")
        mono = tuple((atoms[v], e) for v, e in zip(poly.vars, expo) if e)
        for v, e in zip(poly.vars, expo):
            if e and v not in atoms:
                raise ValidationError(f"unknown atom {v!r}")
            if e < 0:
                raise ValidationError("negative atom powers are not in K0")
        out = out + K0Class({mono: coeff.numerator})
    return out


def k0_mul(a: K0Class, b: K0Class) -> K0Class:
    return a * b


def e_polynomial(a: K0Class) -> MultiPoly:
    """The E-polynomial realization (ring morphism to Z[u, v])."""
    return a.map_atoms(lambda atom: atom.e_poly)


def chi_y_of_class(a: K0Class) -> MultiPoly:
    """E(-y, 1): the chi_y specialization."""
    return e_polynomial(a).substitute_map(
        {"u": -MultiPoly.var("y"), "v": Fraction(1)})


def euler_of_class(a: K0Class) -> int:
    """Topological (compactly supported) Euler characteristic E(1, 1).

    The source text states E(-1,-1) = chi; mixed-Hodge additivity forces
    E(1,1) = chi_c, which is what every worked value here requires, so
    E(1,1) it is (flagged, not silently reconciled).
    """
    val = e_polynomial(a).substitute_map({"u": Fraction(1), "v": Fraction(1)})
    out = val.constant_value()
    if out.denominator != 1:
        raise ValidationError("Euler characteristic must be an integer")
    return out.numerator


def blowup_relation_check(x: K0Class, y: K0Class, bl: K0Class,
                          exc: K0Class) -> bool:
    """[Bl_Y X] - [E] = [X] - [Y] in K0."""
    return bl - exc == x - y


# ---------------------------------------------------------------------
# stratified spaces, maps, constructible functions


@dataclass(frozen=True)
class StratifiedSpace:
    """Finite list of (name, class) strata; the space's class is the sum."""

    name: str
    strata: tuple  # of (name, K0Class)

    def __post_init__(self):
        names = [n for n, _ in self.strata]
        if len(set(names)) != len(names):
            raise ValidationError("duplicate stratum names")

    def stratum_class(self, name: str) -> K0Class:
        for n, c in self.strata:
            if n == name:
                return c
        raise KeyError(name)

    def stratum_names(self):
        return tuple(n for n, _ in self.strata)

    def total_class(self) -> K0Class:
        out = K0Class.zero()
        for _, c in self.strata:
            out = out + c
        return out


@dataclass(frozen=True)
class StratifiedMap:
    """Stratum-to-stratum map with a constant fiber class per source
    stratum; validated so that [source stratum] = [target stratum]*[fiber]."""

    source: StratifiedSpace
    target: StratifiedSpace
    assignment: tuple  # of (source_name, target_name, fiber K0Class)

    def __post_init__(self):
        seen = set()
        for sname, tname, fiber in self.assignment:
            seen.add(sname)
            sclass = self.source.stratum_class(sname)
            tclass = self.target.stratum_class(tname)
            if sclass != tclass * fiber:
                raise ValidationError(
                    f"stratum {sname!r}: class must equal target class "
                    f"times fiber class")
        if seen != set(self.source.stratum_names()):
            raise ValidationError("every source stratum needs an assignment")

    def fiber_over(self, source_name: str):
        for sname, tname, fiber in self.assignment:
            if sname == source_name:
                return tname, fiber
        raise KeyError(source_name)

    @staticmethod
    def identity(space: StratifiedSpace) -> "StratifiedMap":
        return StratifiedMap(space, space, tuple(
            (n, n, K0Class.point()) for n in space.stratum_names()))

    def compose(self, then: "StratifiedMap") -> "StratifiedMap":
        """The map `then o self` (self first)."""
        if then.source is not self.target and \
                then.source != self.target:
            raise ValidationError("maps are not composable")
        assignment = []
        for sname, tname, fiber in self.assignment:
            t2, fiber2 = then.fiber_over(tname)
            assignment.append((sname, t2, fiber * fiber2))
        return StratifiedMap(self.source, then.target, tuple(assignment))


@dataclass(frozen=True)
class ConstructibleFunction:
    """Integer value per stratum of a stratified space."""

    base: StratifiedSpace
    values: tuple  # of (stratum_name, int)

    def __post_init__(self):
        if set(n for n, _ in self.values) != set(self.base.stratum_names()):
            raise ValidationError("values must cover exactly the strata")

    def value(self, name: str) -> int:
        for n, v in self.values:
            if n == name:
                return v
        raise KeyError(name)

    @staticmethod
    def indicator(space: StratifiedSpace) -> "ConstructibleFunction":
        return ConstructibleFunction(space, tuple(
            (n, 1) for n in space.stratum_names()))

    def euler_integral(self) -> int:
        """chi(X; alpha) = sum over strata of value * chi_c(stratum)."""
        return sum(v * euler_of_class(self.base.stratum_class(n))
                   for n, v in self.values)


def pushforward_cf(f: StratifiedMap,
                   alpha: ConstructibleFunction) -> ConstructibleFunction:
    """f_*(alpha): fiberwise Euler integration."""
    if alpha.base != f.source:
        raise ValidationError("function lives on the wrong base")
    acc = {n: 0 for n in f.target.stratum_names()}
    for sname, tname, fiber in f.assignment:
        acc[tname] += alpha.value(sname) * euler_of_class(fiber)
    return ConstructibleFunction(f.target, tuple(sorted(acc.items())))


@dataclass(frozen=True)
class RelativeClass:
    """Relative K0 class over a stratified base: the constant fiber class
    over each stratum (the class over a point of that stratum)."""

    base: StratifiedSpace
    fibers: tuple  # of (stratum_name, K0Class)

    def __post_init__(self):
        if set(n for n, _ in self.fibers) != set(self.base.stratum_names()):
            raise ValidationError("fibers must cover exactly the strata")

    def fiber(self, name: str) -> K0Class:
        for n, c in self.fibers:
            if n == name:
                return c
        raise KeyError(name)

    @staticmethod
    def unit(space: StratifiedSpace) -> "RelativeClass":
        """[X -> id X]: point fiber everywhere."""
        return RelativeClass(space, tuple(
            (n, K0Class.point()) for n in space.stratum_names()))

    def absolute(self) -> K0Class:
        """Push to a point: sum of [stratum]*[fiber]."""
        out = K0Class.zero()
        for n, c in self.fibers:
            out = out + self.base.stratum_class(n) * c
        return out


def pushforward_rel(f: StratifiedMap, a: RelativeClass) -> RelativeClass:
    """Regroup along f, weighting each stratum by its fiber class."""
    if a.base != f.source:
        raise ValidationError("class lives on the wrong base")
    acc = {n: K0Class.zero() for n in f.target.stratum_names()}
    for sname, tname, fiber in f.assignment:
        acc[tname] = acc[tname] + a.fiber(sname) * fiber
    return RelativeClass(f.target, tuple(sorted(acc.items())))


def pullback_rel(f: StratifiedMap, a: RelativeClass) -> RelativeClass:
    """Fiber product: each source stratum inherits the class over its image."""
    if a.base != f.target:
        raise ValidationError("class lives on the wrong base")
    fibers = []
    for sname, tname, _ in f.assignment:
        fibers.append((sname, a.fiber(tname)))
    return RelativeClass(f.source, tuple(sorted(fibers)))


def epsilon(a: RelativeClass) -> ConstructibleFunction:
    """Fiberwise Euler characteristic: sends the relative unit to 1_X."""
    return ConstructibleFunction(a.base, tuple(
        (n, euler_of_class(c)) for n, c in a.fibers))


def exterior_product(a: RelativeClass, b: RelativeClass) -> RelativeClass:
    """Relative class over the product base (product stratification)."""
    strata = tuple(
        (f"{n1}*{n2}", c1 * c2)
        for n1, c1 in a.base.strata for n2, c2 in b.base.strata)
    base = StratifiedSpace(f"{a.base.name}*{b.base.name}", strata)
    fibers = tuple(
        (f"{n1}*{n2}", a.fiber(n1) * b.fiber(n2))
        for n1, _ in a.base.strata for n2, _ in b.base.strata)
    return RelativeClass(base, fibers)


# ---------------------------------------------------------------------
# proalgebraic towers


@dataclass(frozen=True)
class TowerDatum:
    """Per-level fiber data of a proalgebraic tower, indexed from 1.

    Euler mode: nonzero fiber Euler numbers e_1, e_2, ... (e_0 := 1 by
    convention).  Class mode: a constant fiber class gamma.  The arc tower
    of a smooth X of dimension d is class mode with gamma = L^d, where the
    n-th jet level sits at tower index n + 1.
    """

    eulers: tuple = ()
    gamma: K0Class | None = None

    def __post_init__(self):
        if self.gamma is None and not self.eulers:
            raise ValidationError("tower needs Euler numbers or a fiber class")
        if any(e == 0 for e in self.eulers):
            raise ValidationError("fiber Euler numbers must be nonzero")


def pro_euler(t: TowerDatum, n: int, chi_alpha_n: int) -> Fraction:
    """chi(alpha_n) / (e_0 e_1 ... e_{n-1}) with e_0 = 1."""
    if not t.eulers:
        raise ValidationError("tower is not in Euler mode")
    if n < 1:
        raise ValueError("level index starts at 1")
    if n - 1 > len(t.eulers):
        raise ValueError("tower too short for this level")
    denom = 1
    for k in range(1, n):
        denom *= t.eulers[k - 1]
    return Fraction(chi_alpha_n, denom)


def pro_grothendieck(t: TowerDatum, n: int, gamma_alpha_n: K0Class):
    """Gamma(alpha_n) / gamma^(n-1), reduced when gamma divides monomially.

    Returns (numerator, remaining_denominator_power)."""
    if t.gamma is None:
        raise ValidationError("tower is not in class mode")
    if n < 1:
        raise ValueError("level index starts at 1")
    return gamma_alpha_n.divide_monomial(t.gamma, n - 1)


def arc_tower_class(x_class: K0Class, dim: int, level: int) -> K0Class:
    """[L_n(X)] = [X] * L^(n*dim) for smooth X of the given dimension."""
    return x_class * lefschetz(level * dim) if level * dim else x_class


def naive_motivic_measure(x_class: K0Class, dim: int, level: int):
    """Gamma^ind of the full jet space at the given truncation level;
    must return [X] for every level (the naive motivic measure)."""
    tower = TowerDatum(gamma=lefschetz(dim) if dim else K0Class.point())
    return pro_grothendieck(tower, level + 1, arc_tower_class(x_class, dim, level))
