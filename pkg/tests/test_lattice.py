"""Tests for the lattice primitives: Gram pairings, discriminants,
divisibility, and the congruence bookkeeping for moduli cases."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hkverify.lattice import (
    AbelianSurfaceModel,
    GramLattice,
    ModuliCase,
    classify_moduli_case,
    kummer_divisibility,
    max_negative_square,
    nocamere_bound,
    theorem_hypothesis,
)

ints = st.integers(min_value=-9, max_value=9)


def test_gram_pair_basics():
    lat = GramLattice(((2, 1), (1, 2)))
    assert lat.rank == 2
    assert lat.pair((1, 0), (0, 1)) == 1
    assert lat.square((1, 1)) == 6
    assert lat.discriminant() == 3


def test_gram_even_validation():
    GramLattice(((2, 3), (3, 4)), even=True)
    with pytest.raises(ValueError):
        GramLattice(((1, 0), (0, 2)), even=True)


def test_gram_rejects_asymmetric():
    with pytest.raises(ValueError):
        GramLattice(((0, 1), (2, 0)))


@given(ints, ints, ints, ints)
def test_gram_pair_symmetric(a, b, c, d):
    lat = GramLattice(((2, -1), (-1, 4)))
    assert lat.pair((a, b), (c, d)) == lat.pair((c, d), (a, b))


@given(ints, ints, ints, ints, ints, ints)
def test_gram_pair_bilinear(a, b, c, d, e, f):
    lat = GramLattice(((2, -1), (-1, 4)))
    u, v, w = (a, b), (c, d), (e, f)
    lhs = lat.pair((u[0] + v[0], u[1] + v[1]), w)
    assert lhs == lat.pair(u, w) + lat.pair(v, w)


def test_surface_model_gram():
    model = AbelianSurfaceModel(4, 5)
    assert model.gram().gram == ((4, 5), (5, 0))
    assert model.gram().even
    assert model.discriminant() == -25
    assert model.pair((1, 0), (0, 1)) == 5


def test_surface_model_discriminant_is_minus_d_squared():
    for d in (1, 3, 5, 7, 11):
        for so in (2, 4, 8):
            assert AbelianSurfaceModel(so, d).discriminant() == -d * d


def test_surface_model_validation():
    with pytest.raises(ValueError):
        AbelianSurfaceModel(3, 5)  # odd self-pairing
    with pytest.raises(ValueError):
        AbelianSurfaceModel(0, 5)
    with pytest.raises(ValueError):
        AbelianSurfaceModel(4, 0)
    with pytest.raises(ValueError):
        AbelianSurfaceModel(4, -3)


def test_max_negative_square_small_box():
    lat = GramLattice(((-2, 0), (0, -2)))
    assert max_negative_square(lat, 2) == -2
    # positive definite lattice has no negative squares
    assert max_negative_square(GramLattice(((2, 0), (0, 2))), 3) is None


def test_nocamere_bound_values():
    assert nocamere_bound(3, 0) == -6
    assert nocamere_bound(1, 0) == -2
    assert nocamere_bound(3, 2) == -2


@given(st.integers(min_value=1, max_value=6))
def test_nocamere_bound_attained_on_hyperbolic_lattice(d0):
    # rank 2 hyperbolic-type lattice scaled by d0: squares 2*d0*x*y
    lat = GramLattice(((0, d0), (d0, 0)))
    assert max_negative_square(lat, 4) == nocamere_bound(d0, 0) == -2 * d0


def test_divisibility_values():
    assert kummer_divisibility(2, 0, -1) == 2
    assert kummer_divisibility(6, 0, -1) == 6
    assert kummer_divisibility(1, 0, 0) == 1
    assert kummer_divisibility(0, 0, 1) == 6


def test_divisibility_errors():
    with pytest.raises(ValueError):
        kummer_divisibility(0, 0, 0)
    with pytest.raises(TypeError):
        kummer_divisibility(Fraction(1, 2), 0, 0)


@given(ints, ints, ints)
def test_divisibility_divides_six_times_coeffs(p, q, x):
    if p == q == x == 0:
        return
    div = kummer_divisibility(p, q, x)
    assert div >= 1
    assert p % div == 0 and q % div == 0 and (6 * x) % div == 0


def test_moduli_case_classification():
    assert classify_moduli_case(10, 2) is True
    assert classify_moduli_case(4, 1) is True
    assert classify_moduli_case(3, 1) is False
    assert classify_moduli_case(12, 2) is False
    assert classify_moduli_case(138, 6) is True
    with pytest.raises(ValueError):
        classify_moduli_case(10, 4)
    with pytest.raises(ValueError):
        classify_moduli_case(0, 2)


def test_moduli_case_dataclass_validates():
    ModuliCase(10, 2)
    with pytest.raises(ValueError):
        ModuliCase(11, 2)


def test_theorem_hypothesis_values():
    assert theorem_hypothesis(10, 2) == 1
    assert theorem_hypothesis(26, 2) == 2
    assert theorem_hypothesis(138, 6) == 1
    assert theorem_hypothesis(12, 2) is None
    with pytest.raises(ValueError):
        theorem_hypothesis(10, 1)


@given(st.integers(min_value=1, max_value=40))
def test_theorem_hypothesis_round_trip_i2(abar):
    # e = 16*abar - 6 satisfies e = 10 mod 16 and recovers abar
    e = 16 * abar - 6
    assert theorem_hypothesis(e, 2) == abar
    assert classify_moduli_case(e, 2) is True
