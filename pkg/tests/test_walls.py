"""Wall numerics for the moduli vector and the ampleness decision for the
family of polarizations h = 2m*mu(omegabar) - delta."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkverify.kummer import bbf, two_class
from hkverify.lattice import AbelianSurfaceModel
from hkverify.walls import (
    MODULI_VECTOR,
    AmplenessResult,
    MukaiVector,
    ample_thresholds,
    enumerate_wall_numerics,
    generate_wall_cases,
    is_ample_h,
    is_wall_candidate,
    mukai_pair,
    polarization_class,
)


def test_moduli_vector_square():
    assert MODULI_VECTOR == MukaiVector(1, 0, -3)
    assert mukai_pair(MODULI_VECTOR, MODULI_VECTOR) == 6


def test_mukai_pair_explicit_dot():
    u = MukaiVector(2, 4, 1)
    v = MukaiVector(1, 2, -1)
    assert mukai_pair(u, v, ell_dot=3) == -2 * (-1) - 1 * 1 + 3 == 4


def test_mukai_vector_rejects_odd_square():
    with pytest.raises(ValueError):
        MukaiVector(1, 3, 0)


def test_wall_case_table():
    retained = enumerate_wall_numerics()
    table = [(w.ss, w.sv, w.n, w.q, tuple(sorted(w.div_candidates))) for w in retained]
    assert table == [
        (0, 1, 1, -6, (6,)),
        (0, 2, 2, -6, (3, 6)),
        (0, 3, 3, -6, (2, 6)),
        (2, 4, 2, -6, (3, 6)),
        (4, 5, 1, -6, (6,)),
    ]


def test_wall_case_discarded():
    discarded = [w for w in generate_wall_cases() if not w.retained]
    assert len(discarded) == 1
    w = discarded[0]
    assert (w.ss, w.sv) == (2, 3)
    assert w.q == 2  # nonnegative square, not a wall


def test_every_retained_wall_has_square_minus_six():
    for w in enumerate_wall_numerics():
        assert w.q == -6
        assert w.div_candidates <= {1, 2, 3, 6}
        assert all(d % (6 // w.n) == 0 for d in w.div_candidates)


def test_wall_candidate_recognition():
    model = AbelianSurfaceModel(4, 5)
    delta = two_class(model, 0, 0, 1)
    assert is_wall_candidate(delta)  # square -6, divisibility 6
    assert not is_wall_candidate(two_class(model, 1, 0, 0))  # square 4
    with pytest.raises(ValueError):
        is_wall_candidate(two_class(model, 2, 0, 2))  # not primitive


def test_ample_thresholds():
    assert ample_thresholds(1) == (15, 30)
    assert ample_thresholds(2) == (27, 108)
    assert ample_thresholds(3) == (39, 234)


def test_ampleness_verdicts():
    assert is_ample_h(1, 31, 1).render() == "Ample"
    assert is_ample_h(2, 109, 1).render() == "Ample"
    assert is_ample_h(1, 15, 1).render() == "Ample (below certified threshold d <= 30)"
    result = is_ample_h(1, 3, 1)
    assert result.verdict == "not-ample"
    assert result.witness.coeffs() == (0, 1, -1)
    assert result.render() == "NotAmple (witness 0,1,-1)"


def test_ampleness_thresholds_attached_to_result():
    result = is_ample_h(1, 31, 1)
    assert result.on_wall_threshold == 15
    assert result.separating_threshold == 30
    assert not result.below_threshold
    assert is_ample_h(1, 30, 1).below_threshold


def test_ampleness_validation():
    with pytest.raises(ValueError):
        is_ample_h(0, 3, 1)
    with pytest.raises(ValueError):
        is_ample_h(1, 3, 0)


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=60),
    st.integers(min_value=1, max_value=3),
)
def test_ampleness_search_stays_inside_box(abar, d, m):
    # witnesses, when they exist, are certified: square and pairing checked
    result = is_ample_h(abar, d, m)
    assert result.verdict in ("ample", "not-ample")
    if result.witness is not None:
        p, q, x = result.witness.coeffs()
        assert abs(p) <= 1
        beta_sq = 4 * abar * p * p + 2 * p * q * d
        if x == 0:
            assert beta_sq == -6
        else:
            assert x == -1
            assert beta_sq in (0, 2)


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
def test_large_odd_d_is_ample(abar, m):
    _, sep = ample_thresholds(abar)
    for d in range(sep + 1, sep + 20, 2):
        assert is_ample_h(abar, d, m).verdict == "ample"


def test_polarization_class():
    h = polarization_class(1, 3, 1)
    assert h.coeffs() == (2, 0, -1)
    assert bbf(h, h) == 10
    assert polarization_class(2, 7, 3).coeffs() == (6, 0, -1)


def test_result_render_shapes():
    ample = AmplenessResult("ample", None, 15, 30, False)
    assert ample.render() == "Ample"
    hedged = AmplenessResult("ample", None, 15, 30, True)
    assert "below certified threshold" in hedged.render()
