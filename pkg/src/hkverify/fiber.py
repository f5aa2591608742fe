"""Numerics of the singular fibers of the support map: degrees of the two
components, ranks of restricted subsheaves, destabilizer margins, and the
monodromy action on torsion points.

The component V carries the rank-2 lattice (Sigma, Gamma) with
Sigma^2 = Gamma^2 = 0 and Sigma.Gamma = 4; the component Delta carries
(Sigma, Lambda) with Sigma.Lambda = 1, calibrated so that
(Sigma + 12 m d Lambda)^2 = 24 m d equals the second degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import GramLattice

GRAM_V = GramLattice(((0, 4), (4, 0)), even=True)
GRAM_DELTA = GramLattice(((0, 1), (1, 0)), even=True)


def _check_md(m: int, d: int) -> int:
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive integers")
    md = m * d
    if md <= 1:
        raise ValueError("the fiber formulas need m*d > 1")
    return md


def deg_sigma(m: int, d: int) -> int:
    """Degree of the ruling class Sigma on the fiber: 12 m d."""
    _check_md(m, d)
    return 12 * m * d


def restriction_c1_fiber_v(m: int, d: int) -> tuple[Fraction, Fraction]:
    """Coefficients of the polarization restricted to the V component in the
    (Sigma, Gamma) basis: ((md - 1)/2, 3 m d)."""
    md = _check_md(m, d)
    return (Fraction(md - 1, 2), Fraction(3 * md))


def restriction_c1_fiber_delta(m: int, d: int) -> tuple[Fraction, Fraction]:
    """Coefficients on the Delta component in the (Sigma, Lambda) basis."""
    md = _check_md(m, d)
    return (Fraction(1), Fraction(12 * md))


def fiber_degrees(m: int, d: int) -> tuple[int, int]:
    """Degrees of the two fiber components: (12 m d (m d - 1), 24 m d)."""
    md = _check_md(m, d)
    return (12 * md * (md - 1), 24 * md)


def fiber_degrees_gram(m: int, d: int) -> tuple[int, int]:
    """Same degrees recomputed as lattice squares of the restricted
    polarization classes."""
    deg_v = GRAM_V.square(restriction_c1_fiber_v(m, d))
    deg_delta = GRAM_DELTA.square(restriction_c1_fiber_delta(m, d))
    return (int(deg_v), int(deg_delta))


def restriction_c1_smooth_fiber(m: int, d: int) -> int:
    """Multiple of the principal polarization theta on a smooth fiber: the
    restriction is 2 m d * theta."""
    _check_md(m, d)
    return 2 * m * d


@dataclass(frozen=True)
class SubsheafProfile:
    """Restriction ranks (r1', r1'', r2) of a subsheaf on the two rulings
    of V and on Delta; each lies in 0..4 for a rank-4 ambient sheaf."""

    r1p: int
    r1pp: int
    r2: int

    def __post_init__(self) -> None:
        for v in (self.r1p, self.r1pp, self.r2):
            if not 0 <= v <= 4:
                raise ValueError("restriction ranks must lie in 0..4")

    @property
    def admissible(self) -> bool:
        # the two ruling ranks can be ordered without loss of generality
        return self.r1p <= self.r1pp


def subsheaf_rank(profile: SubsheafProfile, m: int, d: int) -> Fraction:
    """Generic rank forced by the degree bookkeeping:
    (r1' + r1'')/2 - (r1' + r1'' - 2 r2)/(2 m d)."""
    md = _check_md(m, d)
    s = profile.r1p + profile.r1pp
    return Fraction(s, 2) - Fraction(s - 2 * profile.r2, 2 * md)


def subsheaf_rank_weighted(profile: SubsheafProfile, m: int, d: int) -> Fraction:
    """Same rank as the degree-weighted average over the fiber components."""
    deg_v, deg_delta = fiber_degrees(m, d)
    s = profile.r1p + profile.r1pp
    return Fraction(s * deg_v + profile.r2 * deg_delta, 2 * deg_v + deg_delta)


def integer_rank_criterion(profile: SubsheafProfile, m: int, d: int) -> bool:
    """For m d > 8, the rank is an integer exactly when r1' + r1'' = 2 r2,
    and then it equals r2."""
    md = _check_md(m, d)
    if md <= 8:
        raise ValueError("the integrality criterion needs m*d > 8")
    return profile.r1p + profile.r1pp == 2 * profile.r2


def destabilizer_margin(r2: int, r1pp: int) -> Fraction:
    """Slack of the destabilizing inequality for an integer-rank profile:
    33 - 6 r2 - (12 + 6 r1pp)/r2; positive slack rules the profile out."""
    if r2 not in (1, 2, 3):
        raise ValueError("a proper destabilizer has rank r2 in {1, 2, 3}")
    return 33 - 6 * r2 - Fraction(12 + 6 * r1pp, r2)


def destabilizer_profiles() -> tuple[SubsheafProfile, ...]:
    """Integer-rank profiles a destabilizer could have: r2 in {1, 2, 3},
    r1' + r1'' = 2 r2, r1' <= r1'' <= 4."""
    out = []
    for r2 in (1, 2, 3):
        s = 2 * r2
        for r1p in range(max(0, s - 4), r2 + 1):
            out.append(SubsheafProfile(r1p, s - r1p, r2))
    return tuple(out)


def minimum_destabilizer_margin() -> Fraction:
    return min(destabilizer_margin(p.r2, p.r1pp) for p in destabilizer_profiles())


def verify_potentialstab(md: int) -> bool:
    """All destabilizer profiles have strictly positive margin; valid for
    odd m d > 8 (the regime where the integrality criterion applies)."""
    if md <= 8:
        raise ValueError("the stability check needs m*d > 8")
    if md % 2 == 0:
        raise ValueError("the stability check needs odd m*d")
    return all(
        destabilizer_margin(p.r2, p.r1pp) > 0 for p in destabilizer_profiles()
    )


def alpha1_identity_check(a1p, a1pp, a2, r2: int, m: int, d: int):
    """Predicted alpha1(F)/rank for a subsheaf with ruling weights a1', a1''
    and Delta weight a2: (a1' + a1'' + a2)/r2 - 2 * deg Sigma."""
    if r2 == 0:
        raise ValueError("the identity needs r2 > 0")
    return (a1p + a1pp + a2) * Fraction(1, r2) - 2 * deg_sigma(m, d)


def full_sheaf_alpha1(a1_prime, a2, m: int, d: int):
    """alpha1(E_Y)/4 for the full sheaf, using the ruling relation
    alpha1'' = alpha1' + 2 deg Sigma:
    a1'/2 + a2/4 - (3/2) deg Sigma."""
    ds = deg_sigma(m, d)
    return a1_prime * Fraction(1, 2) + a2 * Fraction(1, 4) - Fraction(3, 2) * ds


# --- monodromy on torsion points ------------------------------------------

_SWAP = ((0, 1), (1, 0))
_SHEAR = ((1, 0), (-1, -1))


def _mat_mul(m1, m2, n: int):
    return tuple(
        tuple(sum(m1[i][k] * m2[k][j] for k in range(2)) % n for j in range(2))
        for i in range(2)
    )


def _normalize(mat, n: int):
    return tuple(tuple(v % n for v in row) for row in mat)


def monodromy_group(n: int = 2) -> frozenset:
    """Closure of the swap and shear generators in GL2(Z/n)."""
    gens = [_normalize(_SWAP, n), _normalize(_SHEAR, n)]
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = _mat_mul(g, cur, n)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def monodromy_group_order(n: int = 2) -> int:
    return len(monodromy_group(n))


def _apply(mat, element, n: int):
    a, b = element
    new_a = tuple((mat[0][0] * a[i] + mat[0][1] * b[i]) % n for i in range(2))
    new_b = tuple((mat[1][0] * a[i] + mat[1][1] * b[i]) % n for i in range(2))
    return (new_a, new_b)


def _all_elements(n: int):
    rng = range(n)
    return [
        ((a1, a2), (b1, b2))
        for a1 in rng
        for a2 in rng
        for b1 in rng
        for b2 in rng
    ]


def monodromy_fixed_points() -> frozenset:
    """Common fixed points of the monodromy group on the 2-torsion model
    (Z/2)^2 x (Z/2)^2; this is exactly the zero element."""
    group = monodromy_group(2)
    return frozenset(
        el
        for el in _all_elements(2)
        if all(_apply(g, el, 2) == el for g in group)
    )


def invariant_torsion_cosets() -> tuple[frozenset, ...]:
    """Cosets of the 2-torsion subgroup inside the 4-torsion model that the
    monodromy group preserves setwise; only the trivial coset survives."""
    group = monodromy_group(4)
    torsion = frozenset(
        el for el in _all_elements(4) if all(v % 2 == 0 for pair in el for v in pair)
    )
    reps = [el for el in _all_elements(4) if all(v <= 1 for pair in el for v in pair)]
    invariant = []
    for rep in reps:
        coset = frozenset(
            (
                tuple((rep[0][i] + t[0][i]) % 4 for i in range(2)),
                tuple((rep[1][i] + t[1][i]) % 4 for i in range(2)),
            )
            for t in torsion
        )
        if all(frozenset(_apply(g, el, 4) for el in coset) == coset for g in group):
            invariant.append(coset)
    return tuple(invariant)


def trivial_torsion_coset() -> frozenset:
    return frozenset(
        el for el in _all_elements(4) if all(v % 2 == 0 for pair in el for v in pair)
    )
