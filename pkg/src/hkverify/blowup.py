"""Intersection calculus on the blow-up X of the halved-model Kummer
fourfold along the distinguished surface V, and the degree-4 transfer to
the doubled-model Kummer fourfold.

A degree-2 class on X is the pullback of a halved-model class plus a
rational multiple of the exceptional divisor class D. Quartic monomials
reduce by the number k of D-factors:

    k = 0: the quartic form of the halved model,
    k = 1: 0,
    k = 2: minus the V-restriction pairing of the two remaining classes,
    k = 3: 81 times the delta-coefficient of the remaining class,
    k = 4: 162.

The V-restriction pairing of mu(z1) + t1*delta and mu(z2) + t2*delta is
18 * z1.z2 - 81 * t1 * t2, and the constants are tied together by
int_X D^4 = (c2 of the normal bundle) - (c1 of the normal bundle)^2
= 81 + 81 = 162, with c1 of the normal bundle the delta restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .kummer import (
    Degree4Pairing,
    KummerTwoClass,
    NsClass,
    basis,
    bbf,
    c2_pair,
    fujiki_integral,
    two_class,
)
from .lattice import AbelianSurfaceModel, _frac


@dataclass(frozen=True)
class VfData:
    """Frozen intersection data of the blown-up surface V."""

    pair_coeff: int = 18            # int_V (mu z1)|.(mu z2)| = 18 * z1.z2
    delta_restriction_sq: int = -81  # int_V (delta|)^2
    c2_normal: int = 81             # int_V c2 of the normal bundle
    c2_ambient: int = 243           # int_V c2 of the ambient fourfold, restricted

    @property
    def exceptional_fourth(self) -> int:
        # int_X D^4 = c2(N) - c1(N)^2 with c1(N) = delta|
        return self.c2_normal - self.delta_restriction_sq


VF = VfData()


def vf_pair(a: KummerTwoClass, b: KummerTwoClass) -> Fraction:
    """Pairing on V of the restrictions of two halved-model degree-2
    classes: 18 * (ns part pairing) - 81 * (delta coefficients product)."""
    return VF.pair_coeff * a.ns.pair(b.ns) + VF.delta_restriction_sq * a.x * b.x


@dataclass(frozen=True)
class XTwoClass:
    """Degree-2 class on X: pullback of `base` plus t times the exceptional
    divisor class."""

    base: KummerTwoClass
    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", _frac(self.t))

    @property
    def model(self) -> AbelianSurfaceModel:
        return self.base.model

    def __add__(self, other: "XTwoClass") -> "XTwoClass":
        return XTwoClass(self.base + other.base, self.t + other.t)

    def scale(self, k) -> "XTwoClass":
        return XTwoClass(self.base.scale(k), _frac(k) * self.t)


def exceptional_class(model: AbelianSurfaceModel) -> XTwoClass:
    return XTwoClass(two_class(model, 0, 0, 0), Fraction(1))


def x_quartic(
    c1: XTwoClass, c2: XTwoClass, c3: XTwoClass, c4: XTwoClass
) -> Fraction:
    """Integral over X of a product of four degree-2 classes, by multilinear
    expansion into pullback/exceptional monomials and the reduction rules."""
    cs = (c1, c2, c3, c4)
    if len({c.model for c in cs}) != 1:
        raise ValueError("classes live on different fourfolds")
    total = Fraction(0)
    for picks in product((False, True), repeat=4):
        factor = Fraction(1)
        bases = []
        for c, exceptional in zip(cs, picks):
            if exceptional:
                factor *= c.t
            else:
                bases.append(c.base)
        if factor == 0:
            continue
        k = 4 - len(bases)
        if k == 0:
            term = fujiki_integral(*bases)
        elif k == 1:
            term = Fraction(0)
        elif k == 2:
            term = -vf_pair(bases[0], bases[1])
        elif k == 3:
            term = Fraction(81) * bases[0].x
        else:
            term = Fraction(VF.exceptional_fourth)
        total += factor * term
    return total


def halved_model(model: AbelianSurfaceModel) -> AbelianSurfaceModel:
    if model.self_omega % 4:
        raise ValueError("doubled-side model must have omegabar^2 divisible by 4")
    return AbelianSurfaceModel(model.self_omega // 2, model.mixed_d)


def doubled_model(model: AbelianSurfaceModel) -> AbelianSurfaceModel:
    return AbelianSurfaceModel(2 * model.self_omega, model.mixed_d)


def pullback_correspondence(c: KummerTwoClass) -> XTwoClass:
    """Pull a doubled-model degree-2 class back to X through the degree-4
    correspondence: mu(p, q) + x*delta  ->  pullback of mu(2p, q) + x*delta
    on the halved model, plus x times the exceptional class."""
    small = halved_model(c.model)
    base = two_class(small, 2 * c.ns.p, c.ns.q, c.x)
    return XTwoClass(base, c.x)


def pushforward_correspondence(c: XTwoClass) -> KummerTwoClass:
    """Push an X class forward to the doubled model: pulled-back mu(p, q)
    goes to 2*mu(p, 2q), and both the pulled-back delta and the exceptional
    class go to 2*delta."""
    big = doubled_model(c.model)
    return two_class(
        big, 2 * c.base.ns.p, 4 * c.base.ns.q, 2 * (c.base.x + c.t)
    )


def quartic_chain(model_small: AbelianSurfaceModel):
    """Decomposition of (1/4) * int_X (pulled-back delta + D)^4 by the number
    of exceptional factors: returns the k = 0, 2, 3 terms and the k = 4 term.

    The first three are (81, (3/2)*81, 81); adding (1/4) * int D^4 gives 324,
    the delta^4 integral on the doubled model.
    """
    q = XTwoClass(two_class(model_small, 0, 0, 1), Fraction(0))
    d = exceptional_class(model_small)
    term0 = x_quartic(q, q, q, q) / 4
    term2 = 6 * x_quartic(q, q, d, d) / 4
    term3 = 4 * x_quartic(q, d, d, d) / 4
    term4 = x_quartic(d, d, d, d) / 4
    return (term0, term2, term3, term4)


def ch1_bundle(omega: NsClass, x, y) -> KummerTwoClass:
    """First Chern character of the transferred rank-4 bundle for the line
    bundle with class pullback(mu(omega) + x*delta) + y*D:
    2 * mu(pushed omega) + (2x + 2y - 1) * delta on the doubled model."""
    big = doubled_model(omega.model)
    x = _frac(x)
    y = _frac(y)
    # push of p*omegabar + q*gamma through the isogeny is p*omegabar + 2q*gamma
    return two_class(big, 2 * omega.p, 4 * omega.q, 2 * x + 2 * y - 1)


def ch1_bundle_via_pushforward(omega: NsClass, x, y) -> KummerTwoClass:
    """Same class computed as pushforward of the line-bundle class minus half
    the pushforward of the exceptional class."""
    line = XTwoClass(KummerTwoClass(omega, _frac(x)), _frac(y))
    half_d = exceptional_class(omega.model).scale(Fraction(1, 2))
    return pushforward_correspondence(line) - pushforward_correspondence(half_d)


def ch2_pairing(
    omega: NsClass, x, y, alpha: KummerTwoClass, beta: KummerTwoClass
) -> Fraction:
    """int ch2(bundle) . alpha . beta on the doubled model, computed entirely
    on X: expand ch2 through the pushforward of ch(line bundle) * td(X) and
    integrate against the pulled-back classes.

    The c2(X) pairing against two X classes u, v is
    54 * q(u_base, v_base) - 243 t_u t_v  (pullback part of c2)
    + vf(u_base, v_base) - 81 t_u t_v     (exceptional correction),
    and the ambient correction is -4 * td2 = -(1/3) c2, i.e. -18 q(alpha, beta).
    """
    small = omega.model
    x = _frac(x)
    y = _frac(y)
    u = pullback_correspondence(alpha)
    v = pullback_correspondence(beta)
    if u.model != small or v.model != small:
        raise ValueError("alpha, beta must live on the doubled model of omega")
    line = XTwoClass(KummerTwoClass(omega, x), y)
    d = exceptional_class(small)
    c2x = (
        c2_pair(u.base, v.base)
        - 243 * u.t * v.t
        + vf_pair(u.base, v.base)
        - 81 * u.t * v.t
    )
    return (
        (x_quartic(line, line, u, v) - x_quartic(line, d, u, v)) / 2
        + (x_quartic(d, d, u, v) + c2x) / 12
        - 18 * bbf(alpha, beta)
    )


def delta_pairing_mu_mu(x, y, gamma1: NsClass, gamma2: NsClass | None = None):
    """Closed form int Delta(bundle) . mu(gamma1) . mu(gamma2)
    = 18 * (4t^2 + 4t + 3) * gamma1.gamma2 with t = x - y."""
    t = _frac(x) - _frac(y)
    other = gamma1 if gamma2 is None else gamma2
    return 18 * (4 * t * t + 4 * t + 3) * gamma1.pair(other)


def delta_pairing_mu_delta(x, y, gamma: NsClass) -> Fraction:
    """Closed form int Delta(bundle) . mu(gamma) . delta = 0."""
    return Fraction(0)


def delta_pairing_delta_delta(x, y) -> Fraction:
    """Closed form int Delta(bundle) . delta^2 = -324 * (t^2 + t + 1)."""
    t = _frac(x) - _frac(y)
    return -324 * (t * t + t + 1)


def delta_pairing_closed(x, y, alpha: KummerTwoClass, beta: KummerTwoClass) -> Fraction:
    """Bilinear combination of the three closed forms."""
    t = _frac(x) - _frac(y)
    mu_part = 18 * (4 * t * t + 4 * t + 3) * alpha.ns.pair(beta.ns)
    delta_part = -324 * (t * t + t + 1) * alpha.x * beta.x
    return mu_part + delta_part


def delta_pairing_via_chern(
    omega: NsClass, x, y, alpha: KummerTwoClass, beta: KummerTwoClass
) -> Fraction:
    """Independent recomputation of int Delta . alpha . beta through
    Delta = ch1^2 - 8 ch2 and the X calculus."""
    c1 = ch1_bundle(omega, x, y)
    return fujiki_integral(c1, c1, alpha, beta) - 8 * ch2_pairing(
        omega, x, y, alpha, beta
    )


def delta_class_of_bundle(
    model_big: AbelianSurfaceModel, x, y
) -> Degree4Pairing:
    """Delta(bundle) as a degree-4 functional on the doubled model."""
    es = basis(model_big)
    vals = tuple(
        tuple(delta_pairing_closed(x, y, es[i], es[j]) for j in range(3))
        for i in range(3)
    )
    return Degree4Pairing(model_big, vals, Fraction(0))


def is_modular_bundle(
    x, y, model_big: AbelianSurfaceModel | None = None
) -> tuple[bool, Fraction | None]:
    """Whether Delta(bundle) is a rational multiple of the quadratic form,
    which happens exactly for t = x - y in {0, -1}; the coefficient is then
    54 and Delta agrees with c2 on the whole pairing basis."""
    t = _frac(x) - _frac(y)
    if t * (t + 1) != 0:
        return (False, None)
    model = model_big if model_big is not None else AbelianSurfaceModel(4, 3)
    functional = delta_class_of_bundle(model, x, y)
    from .kummer import integrate_degree4, modularity_coefficient

    coeff = modularity_coefficient(functional)
    if coeff != 54:
        raise ArithmeticError(f"modular coefficient came out as {coeff}")
    es = basis(model)
    c2f = Degree4Pairing.c2_class(model)
    for i in range(3):
        for j in range(3):
            lhs = integrate_degree4(functional, es[i], es[j])
            rhs = integrate_degree4(c2f, es[i], es[j])
            if lhs != rhs:
                raise ArithmeticError("Delta and c2 disagree on the basis")
    return (True, Fraction(54))
