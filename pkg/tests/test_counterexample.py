import math

import mpmath
import numpy as np
import pytest

from logpot import closed_forms as cf
from logpot.counterexample import (
    as_halfplane_config,
    build_model,
    certify_L,
    certify_zero_free,
    decay_probe,
    eval_g,
    eval_h,
    identity_certified,
    remark_check,
    residue_identity,
    residues,
)
from logpot.errors import DomainError, PoleProximity
from logpot.potential_core import eval_F

mpmath.mp.dps = 30


@pytest.fixture(scope="module")
def model():
    return build_model(10_000)


def mp_g(w):
    w = mpmath.mpc(w)
    return 1 / (w * (w - 2) * (mpmath.exp(w - 1) + 1))


def test_residue_constants_against_mpmath():
    a, b = residues()
    assert a == pytest.approx(float(1 / (2 * (mpmath.e ** -1 + 1))), abs=1e-16)
    assert b == pytest.approx(float(1 / (2 * (mpmath.e + 1))), abs=1e-16)
    assert a == pytest.approx(0.3655293, abs=1e-7)
    assert b == pytest.approx(0.1344707, abs=1e-7)
    assert abs(a + b - 0.5) <= 1e-15


def test_residues_are_residues_of_g():
    # independent oracle: numerical residue (w - p) g(w) as w -> p
    a, b, c0 = residues(0)
    eps = mpmath.mpf("1e-12")
    assert float(mpmath.re(eps * mp_g(eps))) == pytest.approx(-a, rel=1e-9)
    assert float(mpmath.re(eps * mp_g(2 + eps))) == pytest.approx(b, rel=1e-9)
    u0 = 1 + mpmath.pi * 1j
    res = eps * mp_g(u0 + eps)
    assert complex(res) * u0 * (u0 - 2) == pytest.approx(complex(-1), rel=1e-9)
    # c_k is the residue of -1/(e^{w-1}+1) times 1/(u(u-2)) summed with its conjugate partner
    assert c0 == pytest.approx(float(1 / (mpmath.pi**2 + 1)), rel=1e-15)


def test_c_k_values():
    # computed from the closed form; these differ from commonly quoted roundings
    assert cf.residue_c(0) == pytest.approx(0.0919996684, abs=1e-10)
    assert cf.residue_c(1) == pytest.approx(0.0111325797, abs=1e-10)


def test_model_symmetry(model):
    assert np.all(model.c > 0)
    assert np.array_equal(model.c[0::2], model.c[1::2])
    assert np.array_equal(model.u[1::2], np.conj(model.u[0::2]))
    assert set(model.indices[:4]) == {0, -1, 1, -2}


def test_eval_g_examples():
    assert eval_g(1) == -0.5
    assert eval_g(3) == pytest.approx(float(mpmath.re(mp_g(3))), rel=1e-14)
    assert eval_g(3) == pytest.approx(0.0397343073, abs=1e-10)
    with pytest.raises(PoleProximity):
        eval_g(1 + math.pi * 1j)
    with pytest.raises(PoleProximity):
        eval_g(2.0)


def test_eval_g_underflow():
    v, flag = eval_g(800.0, return_flag=True)
    assert v == 0 and flag
    assert eval_g(5.0, return_flag=True)[1] is False


def test_h_matches_g(model):
    for w in (-1.0, 3 + 1j, 0.5 - 4j, 10 + 10j):
        h = eval_h(model, w)
        assert abs(h.value - eval_g(w)) <= h.error + 16 * cf.EPS * abs(eval_g(w))


def test_h_conjugate_symmetry(model):
    w = 3 + 1j
    assert abs(eval_h(model, w.conjugate()).value - eval_h(model, w).value.conjugate()) <= 1e-12


def test_h_pole(model):
    with pytest.raises(PoleProximity):
        eval_h(model, model.u[5])


def test_residue_identity():
    m = build_model(1_000_000)
    lhs, rhs = residue_identity(m)
    gap = abs(lhs - rhs.value)
    assert gap <= 1 / (2 * math.pi**2 * 1e6)
    assert gap <= 1e-6
    assert identity_certified(m)


def test_sum_of_c_is_a_minus_b():
    total = float(mpmath.nsum(lambda n: 2 / ((2 * n + 1) ** 2 * mpmath.pi**2 + 1), [0, mpmath.inf], method="euler-maclaurin"))
    assert total == pytest.approx(cf.A - cf.B, abs=1e-15)
    assert total == pytest.approx(0.2310586, abs=1e-7)
    assert total == pytest.approx(math.tanh(0.5) / 2, abs=1e-15)


def test_tail_weight_estimate():
    est, err = cf.tail_weight(100)
    exact = float(mpmath.nsum(lambda n: 2 / ((2 * n + 1) ** 2 * mpmath.pi**2 + 1), [101, mpmath.inf], method="euler-maclaurin"))
    assert abs(est - exact) <= err
    assert exact <= cf.tail_weight_bound(100)


def test_tail_bound_monotone_and_order_one_over_n():
    ns = np.array([1e3, 1e4, 1e5, 1e6])
    bounds = np.array([cf.tail_weight_bound(int(n)) for n in ns])
    assert np.all(np.diff(bounds) < 0)
    slope = np.polyfit(np.log(ns), np.log(bounds), 1)[0]
    assert 0.9 <= -slope <= 1.1


def test_halfplane_form(model):
    hp = as_halfplane_config(model)
    assert hp.locations[0] == 2 and hp.weights[0] == pytest.approx(0.1344707, abs=1e-7)
    assert hp.locations[1] == 1 + math.pi * 1j and hp.weights[1] == cf.residue_c(0)
    assert np.all(hp.locations.real >= 1) and np.all(hp.weights > 0)
    rc = remark_check(hp)
    assert np.all(rc.real > 0) and np.allclose(rc.imag, 0, atol=1e-12 * np.abs(rc))


def test_series_F_matches_closed_form(model):
    hp = as_halfplane_config(model)
    for w in (-10, 20 + 20j, 13 + 3.14j, 26, -1000, 1e4j):
        v = eval_F(hp, w)
        assert abs(v.value - cf.halfplane_F(w)) <= v.error + 16 * cf.EPS * abs(v.value)


def test_certify_L(model):
    cert = certify_L(model)
    assert cert.certified and cert.points == 128
    assert cert.max_remainder <= 1e-4


@pytest.mark.parametrize("m", [1, 2, 3])
def test_zero_free(model, m):
    cert = certify_zero_free(model, m)
    assert cert.winding_g.index == -(4 * m + 2)
    assert cert.winding_F.index == -(4 * m + 1)
    assert cert.zeros_g == 0 and cert.zeros_F == 0
    assert cert.certified and cert.series_gap <= 0


def test_zero_free_preconditions(model):
    with pytest.raises(DomainError):
        certify_zero_free(model, 0)
    with pytest.raises(DomainError):
        certify_zero_free(build_model(2), 3)


def test_decay(model):
    probe = decay_probe(model)
    assert 1.8 <= probe.g_exponent <= 2.2
    assert probe.h_decreasing
