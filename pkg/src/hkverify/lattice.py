"""Exact lattice primitives for the rank-2 surface models.

Everything is integer or Fraction arithmetic. The basic object is a Gram
matrix; on top of that sits the two-generator Neron-Severi model
{omegabar, gamma} with gamma isotropic, which is the ambient lattice for
all divisibility and moduli-case bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

import sympy


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an integer or Fraction, got {value!r}")


@dataclass(frozen=True)
class GramLattice:
    """Free finite-rank lattice described by its integer Gram matrix."""

    gram: tuple[tuple[int, ...], ...]
    even: bool = False

    def __post_init__(self) -> None:
        n = len(self.gram)
        if n == 0 or any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if self.even and any(self.gram[i][i] % 2 for i in range(n)):
            raise ValueError("an even lattice needs an even diagonal")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, u, v) -> Fraction:
        if len(u) != self.rank or len(v) != self.rank:
            raise ValueError("coefficient vector length does not match rank")
        total = Fraction(0)
        for i, ui in enumerate(u):
            for j, vj in enumerate(v):
                total += _frac(ui) * self.gram[i][j] * _frac(vj)
        return total

    def square(self, u) -> Fraction:
        return self.pair(u, u)

    def discriminant(self) -> int:
        return int(sympy.Matrix(self.gram).det())


def max_negative_square(lattice: GramLattice, box: int) -> Fraction | None:
    """Largest self-pairing strictly below zero over the coefficient box
    [-box, box]^rank, or None when no vector in the box has negative square.

    Brute-force companion to nocamere_bound.
    """
    if box < 1:
        raise ValueError("box must be at least 1")
    best: Fraction | None = None
    for coords in product(range(-box, box + 1), repeat=lattice.rank):
        q = lattice.square(coords)
        if q < 0 and (best is None or q > best):
            best = q
    return best


def nocamere_bound(d0: int, q_beta: int) -> Fraction:
    """Upper bound -2*d0/(1 + q_beta) for negative squares in a rank-2
    lattice of discriminant -d0^2 containing an isotropic class, where
    q_beta >= 0 is the square of the complementary basis vector."""
    if d0 < 1:
        raise ValueError("d0 must be a positive integer")
    if q_beta < 0:
        raise ValueError("q_beta must be nonnegative")
    return Fraction(-2 * d0, 1 + q_beta)


@dataclass(frozen=True)
class AbelianSurfaceModel:
    """Rank-2 model {omegabar, gamma} with omegabar^2 = self_omega,
    omegabar.gamma = mixed_d and gamma isotropic (discriminant -mixed_d^2).

    The same shape serves both sides of the degree-2 isogeny: self_omega is
    2*abar on the small side and 4*abar on the big one.
    """

    self_omega: int
    mixed_d: int
    saturated: bool = False

    def __post_init__(self) -> None:
        if self.self_omega <= 0 or self.self_omega % 2:
            raise ValueError("omegabar^2 must be a positive even integer")
        if self.mixed_d <= 0:
            raise ValueError("mixed pairing d must be a positive integer")

    def gram(self) -> GramLattice:
        return GramLattice(
            ((self.self_omega, self.mixed_d), (self.mixed_d, 0)), even=True
        )

    def pair(self, u, v) -> Fraction:
        return self.gram().pair(u, v)

    def discriminant(self) -> int:
        return self.gram().discriminant()


def kummer_divisibility(p: int, q: int, x: int) -> int:
    """Divisibility of mu(p*omegabar + q*gamma) + x*delta in the rank-3
    degree-2 model: gcd of the surface content with 6x.

    The pairing against mu-classes reads off gcd(p, q) and the pairing
    against delta contributes 6x, so div = gcd(gcd(p, q), 6x).
    """
    if not all(isinstance(v, int) for v in (p, q, x)):
        raise TypeError("divisibility is defined for integral classes")
    if p == 0 and q == 0 and x == 0:
        raise ValueError("the zero class has no divisibility")
    return gcd(gcd(p, q), 6 * x)


# moduli cases: index i with its congruence modulus for e = -6 mod m
_MODULI_MODULUS = {2: 8, 3: 18, 6: 72}


def classify_moduli_case(e: int, i: int) -> bool:
    """Whether the pair (e, i) lands in one of the four admissible numeric
    cases: i = 1 with e even, or i in {2, 3, 6} with e = -6 mod (8, 18, 72)."""
    if i not in (1, 2, 3, 6):
        raise ValueError("index i must be one of 1, 2, 3, 6")
    if e <= 0:
        raise ValueError("e must be a positive integer")
    if i == 1:
        return e % 2 == 0
    return (e + 6) % _MODULI_MODULUS[i] == 0


@dataclass(frozen=True)
class ModuliCase:
    """An accepted (e, i) pair; construction fails on rejected input."""

    e: int
    i: int

    def __post_init__(self) -> None:
        if not classify_moduli_case(self.e, self.i):
            raise ValueError(f"(e={self.e}, i={self.i}) is not an admissible case")


def theorem_hypothesis(e: int, i: int) -> int | None:
    """Strengthened congruences under which the existence statement applies:
    i = 2 with e = 16*abar - 6, or i = 6 with e = 144*abar - 6.

    Returns abar when accepted, None when rejected.
    """
    if i not in (2, 6):
        raise ValueError("the hypothesis covers only i = 2 and i = 6")
    if e <= 0:
        raise ValueError("e must be a positive integer")
    modulus = 16 if i == 2 else 144
    if (e + 6) % modulus:
        return None
    return (e + 6) // modulus
