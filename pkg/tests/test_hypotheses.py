import math

import numpy as np
import pytest

from logpot import families
from logpot.errors import ConstraintError, DomainError
from logpot.hypotheses import (
    DECLARED,
    FAIL,
    HEURISTIC,
    HOLD,
    INDETERMINATE,
    check_hypotheses,
    exponent_of_convergence,
    negative_axis_probe,
    sector_probe,
    stolz_angle_sup,
    threshold_C,
    threshold_C2,
)
from logpot.potential_core import HALF_PLANE, ChargeConfiguration


def test_thresholds():
    assert threshold_C(2) == pytest.approx(0.7853982, abs=1e-7)
    assert threshold_C(0) == math.inf
    assert threshold_C2(1, 1) == math.pi / 2 == threshold_C(1)
    assert threshold_C2(2, 0.5) == pytest.approx(math.pi / 6, abs=1e-15)
    for bad in (0, -0.1, 1.5):
        with pytest.raises(DomainError):
            threshold_C2(1, bad)
    with pytest.raises(DomainError):
        threshold_C(-1)


def test_declared_lambda():
    assert exponent_of_convergence(families.geometric(0.5, 10)) == (0.0, DECLARED)
    assert exponent_of_convergence(families.power_law(0.5, 10)) == (2.0, DECLARED)
    assert exponent_of_convergence(families.counterexample(10)) == (1.0, DECLARED)


def test_finite_list_lambda_zero(pair):
    assert exponent_of_convergence(pair) == (0.0, DECLARED)


def test_heuristic_lambda():
    k = np.arange(1, 4001)
    fam = families.FamilyGenerator("explicit", accumulates=True)
    c = ChargeConfiguration.from_arrays(k ** -2.0, 1 - k ** -0.5, family=fam,
                                        weight_tail_bound=1 / 4000, tail_radius=4001 ** -0.5)
    lam, src = exponent_of_convergence(c)
    assert src == HEURISTIC
    assert 1.5 <= lam <= 2.5
    assert check_hypotheses(c).verdict != HOLD


def test_stolz():
    geo = ChargeConfiguration.from_family(families.geometric(0.5, 40))
    assert stolz_angle_sup(geo, 0.5) == (0.0, False)
    steep = ChargeConfiguration.from_family(families.power_law(2.0, 50, math.pi / 3))
    assert stolz_angle_sup(steep, 0.5)[0] == pytest.approx(math.pi / 3, abs=1e-15)
    ce = ChargeConfiguration.from_family(families.counterexample(100))
    assert stolz_angle_sup(ce, 0.5)[0] == math.pi / 2
    with pytest.raises(DomainError):
        stolz_angle_sup(geo, 0)


def test_stolz_empty_neighbourhood():
    c = ChargeConfiguration.from_arrays([1.0], [-1.0])
    assert stolz_angle_sup(c, 0.5) == (0.0, True)


def test_hypotheses_table(geo40, power_steep, ce_disc):
    assert check_hypotheses(geo40).verdict == HOLD
    r = check_hypotheses(power_steep)
    assert r.verdict == FAIL and r.condition_angle == "fail"
    r = check_hypotheses(ce_disc)
    assert r.verdict == FAIL and r.stolz_sup == r.threshold_C


def test_hypotheses_finite_is_indeterminate(pair):
    assert check_hypotheses(pair).verdict == INDETERMINATE


def test_hypotheses_needs_disc(ce_half):
    with pytest.raises(ConstraintError):
        check_hypotheses(ce_half)


def test_report_dict(geo40):
    d = check_hypotheses(geo40).as_dict()
    assert d["threshold_C"] == "unbounded" and d["verdict"] == HOLD


def test_negative_axis_single_term():
    c = ChargeConfiguration.from_arrays([1.0], [1.0], HALF_PLANE)
    p = negative_axis_probe(c, np.geomspace(10, 1e4, 30))
    assert p.observed_liminf >= 0.9
    assert np.allclose(p.samples, -p.radii / (p.radii + 1), rtol=1e-14)


def test_negative_axis_counterexample(ce_half):
    r = np.geomspace(100, 1e4, 25)
    p = negative_axis_probe(ce_half, r)
    assert p.reference == -0.5
    assert np.all(np.abs(p.samples - p.closed_form) <= p.errors + 1e-14)
    # the series tends to -1, matching the closed form 1/((w-2)(e^{w-1}+1))
    assert abs(p.samples[r == 1e4][0] + 1) < 1e-3
    assert p.observed_liminf > 0.3


def test_sector_counterexample(ce_half):
    radii = np.geomspace(10, 1e4, 13)
    p = sector_probe(ce_half, 3 * math.pi / 4, radii)
    assert math.isfinite(p.observed_sup)
    tail = p.sup_by_radius[radii >= 100]
    assert np.all(np.diff(tail) <= 0)
    with pytest.raises(DomainError):
        sector_probe(ce_half, math.pi / 4, radii)


def test_sector_single_term():
    c = ChargeConfiguration.from_arrays([1.0], [1.0], HALF_PLANE)
    p = sector_probe(c, math.pi / 2, np.geomspace(10, 1e3, 9))
    assert p.observed_sup <= 0.2


def test_probes_need_halfplane(geo40):
    with pytest.raises(ConstraintError):
        negative_axis_probe(geo40, [10])
