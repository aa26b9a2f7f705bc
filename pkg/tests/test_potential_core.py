import math
from fractions import Fraction

import numpy as np
import pytest

from logpot import families
from logpot.errors import ConstraintError, EmptyConfiguration, PoleProximity, SingularLocation
from logpot.potential_core import (
    DISC,
    HALF_PLANE,
    ChargeConfiguration,
    PointCharge,
    TailBoundedValue,
    disc_to_halfplane,
    eval_f,
    eval_F,
    eval_f_prime,
    eval_F_prime,
    eval_potential_u,
    field_values,
    halfplane_to_disc,
    poles_in_disc_image,
    to_disc,
    to_halfplane,
)


def test_single_charge_f(single):
    v = eval_f(single, 2)
    assert v.value == 0.5
    assert v.remainder == 0


def test_symmetric_pair_cancels(pair):
    assert abs(eval_f(pair, 0).value) == 0


def test_geometric_three_terms_against_rationals(geo3):
    # f(0) = -Σ a_k / z_k with a_k = 2^-k, z_k = 1 - 2^-k
    exact = -sum(Fraction(1, 2**k) / (1 - Fraction(1, 2**k)) for k in (1, 2, 3))
    assert abs(eval_f(geo3, 0).value - float(exact)) <= 1e-15


def test_f_prime_trivial(single, pair):
    assert eval_f_prime(single, 2).value == -0.25
    assert eval_f_prime(pair, 0).value == -8


def test_f_prime_central_difference(geo3):
    h = 1e-6
    fd = (eval_f(geo3, h).value - eval_f(geo3, -h).value) / (2 * h)
    assert abs(fd - eval_f_prime(geo3, 0).value) <= 1e-6


def test_potential_trivial():
    assert eval_potential_u(ChargeConfiguration.from_arrays([1.0], [0.0]), math.e).value == pytest.approx(1.0, abs=1e-15)
    assert eval_potential_u(ChargeConfiguration.from_arrays([2.0], [0.0]), 1).value == 0.0


def test_gradient_identity(geo3):
    z = 0.3 + 0.2j
    h = 1e-6
    ux = (eval_potential_u(geo3, z + h).value - eval_potential_u(geo3, z - h).value) / (2 * h)
    uy = (eval_potential_u(geo3, z + 1j * h).value - eval_potential_u(geo3, z - 1j * h).value) / (2 * h)
    assert abs(complex(ux, -uy) - eval_f(geo3, z).value) <= 1e-6


def test_gradient_identity_second_order(geo3):
    z = 0.3 + 0.2j
    target = eval_f(geo3, z).value.conjugate()

    def err(h):
        ux = (eval_potential_u(geo3, z + h).value - eval_potential_u(geo3, z - h).value) / (2 * h)
        uy = (eval_potential_u(geo3, z + 1j * h).value - eval_potential_u(geo3, z - 1j * h).value) / (2 * h)
        return abs(complex(ux, uy) - target)

    e1, e2 = err(1e-2), err(5e-3)
    assert 3.5 < e1 / e2 < 4.5


def test_pole_proximity(single):
    with pytest.raises(PoleProximity):
        eval_f(single, 1e-16)


def test_empty_configuration():
    with pytest.raises(EmptyConfiguration):
        eval_f(ChargeConfiguration(DISC, ()), 0.5)


def test_constraints():
    with pytest.raises(ConstraintError, match="Re z_k < 1 violated at index 1"):
        ChargeConfiguration.from_arrays([1, 1], [0, 1.5])
    with pytest.raises(ConstraintError):
        PointCharge(-1.0, 0j)
    with pytest.raises(ConstraintError):
        ChargeConfiguration.from_arrays([1], [-1], model=HALF_PLANE)
    with pytest.raises(ConstraintError):
        ChargeConfiguration.from_arrays([1], [0], weight_tail_bound=0.1)


def test_duplicates_merge():
    c = ChargeConfiguration.from_arrays([1.0, 2.0, 0.5], [0.25, 0.25, -0.5])
    assert len(c) == 2
    assert c.total_weight == 3.5
    assert eval_f(c, 0.75).value == pytest.approx(3 / 0.5 + 0.5 / 1.25)


def test_model_mismatch(single):
    with pytest.raises(ConstraintError):
        eval_F(single, 2)


@pytest.mark.parametrize("z,w", [(0, 1), (0.5, 2), (1j, (1 + 1j) / 2)])
def test_mobius_examples(z, w):
    assert abs(disc_to_halfplane(z) - w) <= 1e-15


def test_unit_circle_maps_to_half_line():
    c = ChargeConfiguration.from_arrays([1.0], [1j])
    hp = to_halfplane(c)
    assert abs(hp.locations[0].real - 0.5) <= 1e-12
    assert not poles_in_disc_image(hp)
    assert poles_in_disc_image(to_halfplane(ChargeConfiguration.from_arrays([1.0], [0.3j])))


def test_singular_location():
    # z = 1 is excluded already by the disc constraint; a half-plane round trip guards the map itself
    with pytest.raises((SingularLocation, ConstraintError)):
        to_halfplane(ChargeConfiguration.from_arrays([1.0], [1.0]))


def test_halfplane_single_term():
    c = ChargeConfiguration.from_arrays([1.0], [1.0], HALF_PLANE)
    assert eval_F(c, 2).value == 1.0
    assert eval_F_prime(c, 2).value == -1.0


def test_conjugation_geometric(geo3):
    z = 0.3 + 0.2j
    w = disc_to_halfplane(z)
    lhs = eval_f(geo3, z)
    rhs = eval_F(to_halfplane(geo3), w)
    assert abs(lhs.value - w * rhs.value) <= 1e-12


def test_roundtrip_family(geo3):
    back = to_disc(to_halfplane(geo3))
    assert np.allclose(back.locations, geo3.locations, atol=1e-15)
    assert halfplane_to_disc(disc_to_halfplane(0.3 + 0.1j)) == pytest.approx(0.3 + 0.1j, abs=1e-15)


def test_counterexample_series_matches_h(ce_half):
    from logpot.counterexample import build_model, eval_h

    w = -10.0
    F = eval_F(ce_half, w)
    h = eval_h(build_model(10_000), w)
    assert abs(F.value - w * h.value) <= F.error + abs(w) * h.error


def test_tail_bound_contains_longer_truncation():
    short = ChargeConfiguration.from_family(families.power_law(1.0, 50))
    long = ChargeConfiguration.from_family(families.power_law(1.0, 5000))
    for z in (0.2 + 0.3j, -0.7, 0.9 + 0.2j):
        a, b = eval_f(short, z), eval_f(long, z)
        assert abs(a.value - b.value) <= a.error + b.rounding


def test_field_values_matches_scalar(geo5):
    pts = np.array([0.1 + 0.1j, -0.3, 0.95j])
    vals, err = field_values(geo5, pts)
    for p, v, e in zip(pts, vals, err):
        s = eval_f(geo5, p)
        assert abs(v - s.value) <= e + s.error


def test_tail_bounded_value():
    t = TailBoundedValue(1.0, 0.1, 0.01)
    assert t.error == pytest.approx(0.11)
    assert t.contains(1.1) and not t.contains(1.2)


def test_reversed_order_stable(rng):
    w = rng.uniform(0.1, 2, 50)
    z = rng.uniform(-1, 0.9, 50) + 1j * rng.uniform(-1, 1, 50)
    c1 = ChargeConfiguration.from_arrays(w, z)
    c2 = ChargeConfiguration.from_arrays(w[::-1], z[::-1])
    for p in (0.95 + 0.4j, -2.0, 3j):
        a, b = eval_f(c1, p).value, eval_f(c2, p).value
        assert abs(a - b) <= 1e-12 * abs(a)


def test_frozen_arrays(geo3):
    with pytest.raises(ValueError):
        geo3.weights[0] = 2.0
