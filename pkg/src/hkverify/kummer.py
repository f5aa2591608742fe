"""Degree-2 and degree-4 intersection theory on a generalized Kummer
fourfold attached to a rank-2 surface model.

The quadratic form on degree-2 classes is q(mu(ns) + x*delta) = ns.ns - 6x^2,
and quadruple products integrate through the quartic form
3 * (q12*q34 + q13*q24 + q14*q23).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .lattice import AbelianSurfaceModel, _frac

#: q(delta) on every generalized Kummer fourfold in this family.
DELTA_SQUARE = Fraction(-6)

#: int c2 . alpha . beta = 54 * q(alpha, beta).
C2_PAIR_COEFF = Fraction(54)

#: int c2^2.
C2_SQUARE_VALUE = Fraction(756)


@dataclass(frozen=True)
class NsClass:
    """Rational class p*omegabar + q*gamma in a surface model."""

    model: AbelianSurfaceModel
    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", _frac(self.p))
        object.__setattr__(self, "q", _frac(self.q))

    def pair(self, other: "NsClass") -> Fraction:
        if self.model != other.model:
            raise ValueError("classes live in different surface models")
        return self.model.pair((self.p, self.q), (other.p, other.q))

    def square(self) -> Fraction:
        return self.pair(self)

    def __add__(self, other: "NsClass") -> "NsClass":
        if self.model != other.model:
            raise ValueError("classes live in different surface models")
        return NsClass(self.model, self.p + other.p, self.q + other.q)

    def __neg__(self) -> "NsClass":
        return NsClass(self.model, -self.p, -self.q)

    def __sub__(self, other: "NsClass") -> "NsClass":
        return self + (-other)

    def scale(self, k) -> "NsClass":
        k = _frac(k)
        return NsClass(self.model, k * self.p, k * self.q)


@dataclass(frozen=True)
class KummerTwoClass:
    """Degree-2 class mu(ns) + x*delta on the Kummer fourfold of ns.model."""

    ns: NsClass
    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _frac(self.x))

    @property
    def model(self) -> AbelianSurfaceModel:
        return self.ns.model

    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.ns.p, self.ns.q, self.x)

    def __add__(self, other: "KummerTwoClass") -> "KummerTwoClass":
        return KummerTwoClass(self.ns + other.ns, self.x + other.x)

    def __neg__(self) -> "KummerTwoClass":
        return KummerTwoClass(-self.ns, -self.x)

    def __sub__(self, other: "KummerTwoClass") -> "KummerTwoClass":
        return self + (-other)

    def scale(self, k) -> "KummerTwoClass":
        return KummerTwoClass(self.ns.scale(k), _frac(k) * self.x)


def two_class(model: AbelianSurfaceModel, p, q, x) -> KummerTwoClass:
    return KummerTwoClass(NsClass(model, p, q), x)


def basis(model: AbelianSurfaceModel) -> tuple[KummerTwoClass, ...]:
    """The degree-2 model basis (mu(omegabar), mu(gamma), delta)."""
    return (
        two_class(model, 1, 0, 0),
        two_class(model, 0, 1, 0),
        two_class(model, 0, 0, 1),
    )


def bbf(a: KummerTwoClass, b: KummerTwoClass) -> Fraction:
    """The degree-2 quadratic form, polarized: ns.ns - 6 * x_a * x_b."""
    return a.ns.pair(b.ns) + DELTA_SQUARE * a.x * b.x


def fujiki_integral(
    b1: KummerTwoClass, b2: KummerTwoClass, b3: KummerTwoClass, b4: KummerTwoClass
) -> Fraction:
    """Integral of a product of four degree-2 classes:
    3 * sum of q-products over the three perfect matchings of {1,2,3,4}."""
    q12 = bbf(b1, b2)
    q13 = bbf(b1, b3)
    q14 = bbf(b1, b4)
    q23 = bbf(b2, b3)
    q24 = bbf(b2, b4)
    q34 = bbf(b3, b4)
    return 3 * (q12 * q34 + q13 * q24 + q14 * q23)


def fujiki_symmetrized(
    b1: KummerTwoClass, b2: KummerTwoClass, b3: KummerTwoClass, b4: KummerTwoClass
) -> Fraction:
    """Oracle for fujiki_integral: (3/8) * sum over all 24 orderings of
    q(s1, s2) * q(s3, s4). Each matching appears 8 times in the sum."""
    bs = (b1, b2, b3, b4)
    total = Fraction(0)
    for s in permutations(range(4)):
        total += bbf(bs[s[0]], bs[s[1]]) * bbf(bs[s[2]], bs[s[3]])
    return Fraction(3, 8) * total


def c2_pair(a: KummerTwoClass, b: KummerTwoClass) -> Fraction:
    """int c2 . a . b = 54 * q(a, b)."""
    return C2_PAIR_COEFF * bbf(a, b)


def c2_square() -> Fraction:
    """int c2^2."""
    return C2_SQUARE_VALUE


def riemann_roch_from_square(qval):
    """Euler characteristic of a line bundle with q(c1) = qval:
    3 * binom(qval/2 + 2, 2). Accepts any exact scalar (Fraction, sympy)."""
    if isinstance(qval, int):
        qval = Fraction(qval)
    half = qval / 2
    return 3 * (half + 2) * (half + 1) / 2


def riemann_roch(c1: KummerTwoClass) -> Fraction:
    """chi of the line bundle with first Chern class c1; q(c1) must be an
    even integer or the input is rejected."""
    q = bbf(c1, c1)
    if q.denominator != 1 or q.numerator % 2:
        raise ValueError(f"q(c1) = {q} is not an even integer")
    return riemann_roch_from_square(q)


_ZERO3 = ((Fraction(0),) * 3,) * 3


@dataclass(frozen=True)
class Degree4Pairing:
    """A degree-4 functional on pairs of degree-2 classes, stored as its
    value matrix over the basis (mu(omegabar), mu(gamma), delta) plus a
    rational multiple of c2."""

    model: AbelianSurfaceModel
    values: tuple[tuple[Fraction, ...], ...] = _ZERO3
    c2_coeff: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        vals = tuple(tuple(_frac(v) for v in row) for row in self.values)
        if len(vals) != 3 or any(len(row) != 3 for row in vals):
            raise ValueError("value matrix must be 3x3")
        for i in range(3):
            for j in range(3):
                if vals[i][j] != vals[j][i]:
                    raise ValueError("value matrix must be symmetric")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "c2_coeff", _frac(self.c2_coeff))

    @classmethod
    def c2_class(cls, model: AbelianSurfaceModel) -> "Degree4Pairing":
        return cls(model, _ZERO3, Fraction(1))

    @classmethod
    def sym_square(cls, z: KummerTwoClass) -> "Degree4Pairing":
        """The functional alpha, beta -> int z.z.alpha.beta."""
        es = basis(z.model)
        vals = tuple(
            tuple(fujiki_integral(z, z, es[i], es[j]) for j in range(3))
            for i in range(3)
        )
        return cls(z.model, vals, Fraction(0))


def integrate_degree4(
    functional: Degree4Pairing, a: KummerTwoClass, b: KummerTwoClass
) -> Fraction:
    """Evaluate the degree-4 functional against the product a.b by bilinear
    extension of its basis values, plus the c2 contribution 54*q(a, b)."""
    if a.model != functional.model or b.model != functional.model:
        raise ValueError("classes live in a different surface model")
    ca = a.coeffs()
    cb = b.coeffs()
    total = Fraction(0)
    for i in range(3):
        for j in range(3):
            total += ca[i] * cb[j] * functional.values[i][j]
    return total + functional.c2_coeff * c2_pair(a, b)


def modularity_coefficient(functional: Degree4Pairing) -> Fraction | None:
    """The rational d with int F.alpha.alpha = d * q(alpha) for every alpha,
    tested on the three basis classes and all pairwise sums; None when no
    single coefficient works."""
    es = basis(functional.model)
    probes = list(es)
    for i in range(3):
        for j in range(i + 1, 3):
            probes.append(es[i] + es[j])
    pairs = [(integrate_degree4(functional, t, t), bbf(t, t)) for t in probes]
    coeff: Fraction | None = None
    for val, qv in pairs:
        if qv != 0:
            coeff = val / qv
            break
    if coeff is None:
        return None
    for val, qv in pairs:
        if val != coeff * qv:
            return None
    return coeff
