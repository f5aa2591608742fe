"""Chern numbers and Euler characteristics of the transferred rank-4
bundle, as exact polynomials in the polarization parameter a (the halved
model has omega^2 = 2a, so q(ch1) = 16a - 6).

Every function accepts an int, a Fraction, or a sympy expression and
computes with it exactly; ints are promoted to Fractions. The stated
closed form for int ch1^2 ch2 disagrees with the derived one, and both
are exposed so the report can flag exactly that record.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .kummer import riemann_roch_from_square


def _scalar(a):
    return Fraction(a) if isinstance(a, int) else a


def ch1_square_q(a):
    """q(ch1) = 16a - 6."""
    return 16 * _scalar(a) - 6


def ch1_fourth(a):
    """int ch1^4 = 9 * q(ch1)^2 = 2304 a^2 - 1728 a + 324."""
    q = ch1_square_q(a)
    return 9 * q * q


def ch1sq_c2(a):
    """int ch1^2 . c2 = 54 * q(ch1)."""
    return 54 * ch1_square_q(a)


def ch1sq_ch2_stated(a):
    """int ch1^2 ch2 as stated: 576 a^2 - 540 a + 81."""
    a = _scalar(a)
    return 576 * a * a - 540 * a + 81


def ch1sq_ch2_derived(a):
    """int ch1^2 ch2 via ch2 = (ch1^2 - c2)/8: (int ch1^4 - 54 q(ch1)) / 8
    = 288 a^2 - 324 a + 81."""
    return (ch1_fourth(a) - ch1sq_c2(a)) / 8


def gianni_decomposition(a):
    """The five summands of int ch1 ch3: the curvature-weighted piece and
    the four Todd-expansion integrals, in that order."""
    a = _scalar(a)
    return (
        27 - 72 * a,
        Fraction(-27, 2) + 0 * a,
        36 * a,
        -9 * a,
        24 * a * a,
    )


def ch1_ch3(a):
    """int ch1 ch3 = 24 a^2 - 45 a + 27/2."""
    total = 0
    for part in gianni_decomposition(a):
        total = total + part
    return total


def ch2_squared(a):
    """int ch2^2 = 36 a^2 - 54 a + 27."""
    a = _scalar(a)
    return 36 * a * a - 54 * a + 27


def ch2_squared_derived(a):
    """int ch2^2 via ch2 = (ch1^2 - c2)/8:
    (int ch1^4 - 2 * 54 q(ch1) + 756) / 64."""
    return (ch1_fourth(a) - 2 * ch1sq_c2(a) + 756) / 64


def ch2_td2(a):
    """int ch2 . td2 = 9a - 45/4."""
    return 9 * _scalar(a) - Fraction(45, 4)


def ch4_integral(a):
    """int ch4 = (3/2) a^2 - (9/2) a + 9/4."""
    a = _scalar(a)
    return Fraction(3, 2) * a * a - Fraction(9, 2) * a + Fraction(9, 4)


def ch4_via_chi(a):
    """int ch4 recovered from chi = 12 + int ch2 td2 + int ch4."""
    return chi_bundle(a) - 12 - ch2_td2(a)


def chi_bundle(a):
    """chi of the rank-4 bundle: (3/2) a^2 + (9/2) a + 3."""
    a = _scalar(a)
    return Fraction(3, 2) * a * a + Fraction(9, 2) * a + 3


def chi_bundle_rr(a):
    """Same chi through the line-bundle count on the halved model, where
    q(c1) = 2a."""
    return riemann_roch_from_square(2 * _scalar(a))


def chi_bundle_hrr(a):
    """Same chi through rank * chi(O) + int ch2 td2 + int ch4."""
    return 12 + ch2_td2(a) + ch4_integral(a)


def ch2_c2(a):
    """int ch2 . c2 via ch2 = (ch1^2 - c2)/8: (54 q(ch1) - 756) / 8."""
    return (ch1sq_c2(a) - 756) / 8


def chi_end_decomposition(a):
    """chi(End) = rank^2 chi(O) + (1/12) int (8 ch2 - ch1^2) c2
    + int (8 ch4 - 2 ch1 ch3 + ch2^2), using derived entries only.
    Returns the three summands (48, -63, 18)."""
    first = 48 + 0 * _scalar(a)
    middle = (8 * ch2_c2(a) - ch1sq_c2(a)) / 12
    last = 8 * ch4_integral(a) - 2 * ch1_ch3(a) + ch2_squared_derived(a)
    return (first, middle, last)


def chi_end(a):
    total = 0
    for part in chi_end_decomposition(a):
        total = total + part
    return total


def chi_end_traceless(a):
    """chi of the traceless endomorphisms: chi(End) - chi(O) = 0."""
    return chi_end(a) - 3


def a_invariant(rank: int = 4, modular_coeff: int = 54) -> Fraction:
    """The invariant rank^2 * d / (4 * chi(O)) controlling deformation
    counts; 16 * 54 / 12 = 72 for the rank-4 bundle."""
    return Fraction(rank * rank * modular_coeff, 4 * 3)


def a_invariant_components() -> tuple[int, int, int]:
    return (16, 54, 12)


@dataclass(frozen=True)
class ChernNumberTable:
    """All degree-8 numbers of the bundle at a fixed integer a >= 1."""

    a: Fraction
    ch1_fourth: Fraction
    ch1sq_ch2_stated: Fraction
    ch1sq_ch2_derived: Fraction
    ch1_ch3: Fraction
    ch2_squared: Fraction
    ch4: Fraction
    chi_bundle: Fraction
    chi_end: Fraction
    chi_end_traceless: Fraction

    @classmethod
    def compute(cls, a: int) -> "ChernNumberTable":
        if not isinstance(a, int) or a < 1:
            raise ValueError("a must be an integer >= 1")
        return cls(
            a=Fraction(a),
            ch1_fourth=ch1_fourth(a),
            ch1sq_ch2_stated=ch1sq_ch2_stated(a),
            ch1sq_ch2_derived=ch1sq_ch2_derived(a),
            ch1_ch3=ch1_ch3(a),
            ch2_squared=ch2_squared(a),
            ch4=ch4_integral(a),
            chi_bundle=chi_bundle(a),
            chi_end=chi_end(a),
            chi_end_traceless=chi_end_traceless(a),
        )


SYMBOL_A = sympy.symbols("a")


def _is_zero_poly(expr) -> bool:
    return sympy.expand(expr) == 0


def polynomial_identities() -> dict[str, bool]:
    """The identities in a that the numbers must satisfy, checked as exact
    polynomial identities (not sampled)."""
    a = SYMBOL_A
    return {
        "chi-end-constant-3": _is_zero_poly(chi_end(a) - 3),
        "chi-end-traceless-0": _is_zero_poly(chi_end_traceless(a)),
        "hirzebruch-combination-18": _is_zero_poly(
            8 * ch4_integral(a) - 2 * ch1_ch3(a) + ch2_squared_derived(a) - 18
        ),
        "ch2-squared-paths-agree": _is_zero_poly(
            ch2_squared(a) - ch2_squared_derived(a)
        ),
        "chi-paths-agree": _is_zero_poly(chi_bundle(a) - chi_bundle_rr(a))
        and _is_zero_poly(chi_bundle(a) - chi_bundle_hrr(a)),
        "ch4-paths-agree": _is_zero_poly(ch4_integral(a) - ch4_via_chi(a)),
        "ch1ch3-decomposition-sums": _is_zero_poly(
            ch1_ch3(a) - (24 * a * a - 45 * a + Fraction(27, 2))
        ),
        "ch1sq-ch2-statement-differs": not _is_zero_poly(
            ch1sq_ch2_stated(a) - ch1sq_ch2_derived(a)
        ),
    }
