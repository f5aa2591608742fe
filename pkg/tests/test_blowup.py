"""The blow-up calculus: quartic reduction rules, the degree-4 transfer
between the two Kummer models, the transferred bundle's ch1/ch2, and the
discriminant pairing with its modularity window."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkverify.blowup import (
    VF,
    VfData,
    XTwoClass,
    ch1_bundle,
    ch1_bundle_via_pushforward,
    ch2_pairing,
    delta_class_of_bundle,
    delta_pairing_closed,
    delta_pairing_delta_delta,
    delta_pairing_mu_delta,
    delta_pairing_mu_mu,
    delta_pairing_via_chern,
    doubled_model,
    exceptional_class,
    halved_model,
    is_modular_bundle,
    pullback_correspondence,
    pushforward_correspondence,
    quartic_chain,
    vf_pair,
    x_quartic,
)
from hkverify.kummer import (
    Degree4Pairing,
    NsClass,
    basis,
    fujiki_integral,
    integrate_degree4,
    two_class,
)
from hkverify.lattice import AbelianSurfaceModel

BIG = AbelianSurfaceModel(4, 5)
SMALL = AbelianSurfaceModel(2, 5)

ints = st.integers(min_value=-4, max_value=4)
small_ints = st.integers(min_value=-3, max_value=3)


def big_classes():
    return st.builds(lambda p, q, x: two_class(BIG, p, q, x), ints, ints, ints)


def x_classes():
    return st.builds(
        lambda p, q, x, t: XTwoClass(two_class(SMALL, p, q, x), t),
        ints,
        ints,
        ints,
        ints,
    )


def test_vf_constants():
    assert VF == VfData(18, -81, 81, 243)
    assert VF.exceptional_fourth == 162


def test_vf_pair_values():
    delta_r = two_class(SMALL, 0, 0, 1)
    omega_r = two_class(SMALL, 1, 0, 0)
    assert vf_pair(delta_r, delta_r) == -81
    assert vf_pair(omega_r, omega_r) == 36
    assert vf_pair(omega_r, delta_r) == 0


def test_exceptional_fourth_power():
    d = exceptional_class(SMALL)
    assert x_quartic(d, d, d, d) == 162


def test_mixed_exceptional_powers():
    q = XTwoClass(two_class(SMALL, 0, 0, 1), 0)
    d = exceptional_class(SMALL)
    assert x_quartic(q, q, q, d) == 0
    assert x_quartic(q, q, d, d) == 81
    assert x_quartic(q, d, d, d) == 81


def test_quartic_chain():
    chain = quartic_chain(SMALL)
    assert chain == (81, Fraction(243, 2), 81, Fraction(81, 2))
    assert sum(chain) == 324


def test_x_quartic_rejects_mixed_models():
    d1 = exceptional_class(SMALL)
    d2 = exceptional_class(AbelianSurfaceModel(2, 3))
    with pytest.raises(ValueError):
        x_quartic(d1, d1, d1, d2)


def test_model_halving():
    assert halved_model(BIG) == SMALL
    assert doubled_model(SMALL) == BIG
    with pytest.raises(ValueError):
        halved_model(SMALL)  # 2 is not divisible by 4


@given(big_classes(), big_classes(), big_classes(), big_classes())
def test_pullback_has_degree_four(c1, c2, c3, c4):
    pbs = [pullback_correspondence(c) for c in (c1, c2, c3, c4)]
    assert x_quartic(*pbs) == 4 * fujiki_integral(c1, c2, c3, c4)


def test_pullback_of_delta_fourth():
    pb = pullback_correspondence(two_class(BIG, 0, 0, 1))
    assert pb.base.coeffs() == (0, 0, 1)
    assert pb.t == 1
    assert x_quartic(pb, pb, pb, pb) == 1296


@given(big_classes())
def test_push_pull_is_multiplication_by_four(c):
    assert pushforward_correspondence(pullback_correspondence(c)) == c.scale(4)


def test_pushforward_of_exceptional():
    pushed = pushforward_correspondence(exceptional_class(SMALL))
    assert pushed.coeffs() == (0, 0, 2)


def test_x_class_arithmetic():
    u = XTwoClass(two_class(SMALL, 1, 2, 3), 4)
    v = XTwoClass(two_class(SMALL, 0, -2, 1), -1)
    s = u + v
    assert s.base.coeffs() == (1, 0, 4)
    assert s.t == 3
    assert u.scale(Fraction(1, 2)).t == 2


def test_ch1_values():
    omega = NsClass(SMALL, 1, 0)
    assert ch1_bundle(omega, 0, 0).coeffs() == (2, 0, -1)
    assert ch1_bundle(NsClass(SMALL, 3, 0), 0, 0).coeffs() == (6, 0, -1)
    assert ch1_bundle(omega, 1, 2).coeffs() == (2, 0, 5)


@given(small_ints, small_ints, small_ints, small_ints)
def test_ch1_two_paths_agree(p, q, x, y):
    omega = NsClass(SMALL, p, q)
    assert ch1_bundle(omega, x, y) == ch1_bundle_via_pushforward(omega, x, y)


def test_ch2_delta_closed_form():
    # against two pulled-back delta classes the pairing is
    # (81/2)(5x^2 + 6xy + 5y^2 - 3x - 5y + 2) - 18 * omega^2
    omega = NsClass(SMALL, 1, 0)
    delta = two_class(BIG, 0, 0, 1)
    for x, y in [(0, 0), (1, 0), (0, 1), (2, -1), (-1, 3)]:
        expected = (
            Fraction(81, 2)
            * (5 * x * x + 6 * x * y + 5 * y * y - 3 * x - 5 * y + 2)
            - 18 * omega.square()
        )
        assert ch2_pairing(omega, x, y, delta, delta) == expected


@given(small_ints, small_ints, small_ints, small_ints)
def test_discriminant_delta_delta_independent_of_omega(p, x, y, d_idx):
    # the omega^2 contributions cancel in ch1^2 - 8 ch2
    if p == 0:
        p = 1
    omega = NsClass(SMALL, p, d_idx)
    delta = two_class(BIG, 0, 0, 1)
    got = delta_pairing_via_chern(omega, x, y, delta, delta)
    assert got == delta_pairing_delta_delta(x, y)


@given(small_ints, small_ints, big_classes(), big_classes())
def test_discriminant_pairing_two_paths_agree(x, y, alpha, beta):
    omega = NsClass(SMALL, 1, 0)
    got = delta_pairing_via_chern(omega, x, y, alpha, beta)
    assert got == delta_pairing_closed(x, y, alpha, beta)


def test_discriminant_closed_form_values():
    gamma = NsClass(BIG, 0, 1)  # isotropic
    omega = NsClass(BIG, 1, 0)
    # t = 0: coefficient 18 * 3
    assert delta_pairing_mu_mu(0, 0, omega) == 54 * 4
    # gamma vs omega picks up the mixed pairing 5
    assert delta_pairing_mu_mu(0, 0, gamma, omega) == 54 * 5
    # t = -2: coefficient 18 * (16 - 8 + 3) = 198
    assert delta_pairing_mu_mu(-2, 0, omega) == 198 * 4
    assert delta_pairing_mu_delta(1, 5, omega) == 0
    assert delta_pairing_delta_delta(0, 0) == -324
    assert delta_pairing_delta_delta(-1, 0) == -324
    assert delta_pairing_delta_delta(1, 0) == -972


def test_modularity_window():
    assert is_modular_bundle(0, 0) == (True, 54)
    assert is_modular_bundle(0, 1) == (True, 54)
    assert is_modular_bundle(3, 3) == (True, 54)
    assert is_modular_bundle(0, 2) == (False, None)
    assert is_modular_bundle(5, 1) == (False, None)


@given(st.integers(min_value=-10, max_value=10), st.integers(min_value=-10, max_value=10))
def test_modularity_iff_t_in_window(x, y):
    t = x - y
    modular, coeff = is_modular_bundle(x, y)
    assert modular == (t in (0, -1))
    assert coeff == (54 if modular else None)


def test_modular_discriminant_matches_c2_on_basis():
    for model in (BIG, AbelianSurfaceModel(4, 3), AbelianSurfaceModel(8, 7)):
        functional = delta_class_of_bundle(model, 2, 2)  # t = 0
        c2f = Degree4Pairing.c2_class(model)
        es = basis(model)
        for i in range(3):
            for j in range(3):
                assert integrate_degree4(functional, es[i], es[j]) == integrate_degree4(
                    c2f, es[i], es[j]
                )
