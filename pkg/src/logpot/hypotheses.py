"""Checks of the boundary-accumulation hypotheses and the sector probes.

A configuration accumulating at z = 1 is summarized by its exponent of
convergence λ (inf of τ with Σ|1 - z_k|^τ < ∞) and the Stolz angle
sup |arg(1 - z_k)| near 1.  Zeros are guaranteed to approach 1 when the angle is
strictly below C(λ) = π/(2λ).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from .errors import ConstraintError, DomainError
from .families import FamilyGenerator
from .potential_core import DISC, HALF_PLANE, ChargeConfiguration, field_values

DECLARED = "declared"
HEURISTIC = "heuristic"

HOLD = "hypotheses-hold"
FAIL = "hypotheses-fail"
INDETERMINATE = "indeterminate"

DEFAULT_EPSILON = 0.5
DEFAULT_TAU_GRID = tuple(np.round(np.arange(0.25, 8.01, 0.25), 2))


def threshold_C(lam: float) -> float:
    """π/(2λ); ``math.inf`` (unbounded) for λ = 0."""
    if lam < 0 or math.isnan(lam):
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    return math.inf if lam == 0 else math.pi / (2.0 * lam)


def threshold_C2(lam: float, sigma: float) -> float:
    """(2/λ) arcsin √(σ/2); equals π/(2λ) at σ = 1."""
    if not 0.0 < sigma <= 1.0:
        raise DomainError(f"sigma must lie in (0, 1], got {sigma}")
    if lam < 0 or math.isnan(lam):
        raise DomainError(f"lambda must be nonnegative, got {lam}")
    if lam == 0:
        return math.inf
    if sigma == 1.0:
        return math.pi / (2.0 * lam)
    return 2.0 / lam * math.asin(math.sqrt(sigma / 2.0))


def _boundary_offsets(config: ChargeConfiguration) -> np.ndarray:
    """1 - z_k for every stored charge, from either model.

    Generated families use 1/w_k, which avoids the cancellation in 1 - z_k.
    """
    fam = config.family
    if fam is not None and fam.kind != "explicit":
        return 1.0 / fam.halfplane_locations()
    if config.model == DISC:
        return 1.0 - config.locations
    return 1.0 / config.locations


def _heuristic_lambda(d: np.ndarray, tau_grid) -> float:
    # Terms |1-z_k|^τ ~ k^{-pτ}; the sum converges when the fitted decay
    # exponent of the terms, over the second half of the sorted list, exceeds 1.
    d = np.sort(np.abs(d))[::-1]
    d = d[d > 0]
    n = len(d)
    if n < 8:
        return 0.0
    k = np.arange(1, n + 1, dtype=float)
    half = slice(n // 2, n)
    slope = np.polyfit(np.log(k[half]), np.log(d[half]), 1)[0]
    converges = [tau for tau in sorted(tau_grid) if -slope * tau > 1.0]
    if not converges:
        return float(max(tau_grid))
    first = converges[0]
    below = [tau for tau in tau_grid if tau < first]
    return 0.0 if not below else float(0.5 * (max(below) + first))


def exponent_of_convergence(source, tau_grid=DEFAULT_TAU_GRID) -> tuple[float, str]:
    """(λ, source) for a FamilyGenerator or a ChargeConfiguration.

    Declared values come from the generator.  Finite lists that do not
    accumulate at 1 have λ = 0 (every finite sum converges).  Otherwise λ is
    bracketed on ``tau_grid`` from the decay of the stored terms; this is a
    heuristic and is labelled as such.
    """
    family = source if isinstance(source, FamilyGenerator) else source.family
    if family is not None and family.declared_lambda is not None:
        return float(family.declared_lambda), DECLARED
    if isinstance(source, FamilyGenerator):
        if not family.accumulates_at_one:
            return 0.0, DECLARED
        raise DomainError("explicit family without charges; pass the configuration")
    if family is None or not family.accumulates_at_one:
        return 0.0, DECLARED
    return _heuristic_lambda(_boundary_offsets(source), tau_grid), HEURISTIC


def stolz_angle_sup(config: ChargeConfiguration, epsilon: float = DEFAULT_EPSILON) -> tuple[float, bool]:
    """(sup |arg(1 - z_k)| over |1 - z_k| <= ε, empty_flag).

    A generator's limit angle is included, since infinitely many omitted
    charges lie in every neighbourhood of 1.  ``empty_flag`` is set when no
    stored charge lies in the neighbourhood.
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    d = _boundary_offsets(config)
    near = d[np.abs(d) <= epsilon]
    sup = float(np.max(np.abs(np.angle(near)))) if len(near) else 0.0
    fam = config.family
    if fam is not None and fam.accumulates_at_one:
        sup = max(sup, fam.limit_angle)
    return sup, len(near) == 0


@dataclass(frozen=True)
class HypothesisReport:
    lam: float
    lambda_source: str
    epsilon: float
    stolz_sup: float
    threshold_C: float
    threshold_C2: float
    sigma: float
    condition_exponent: str
    condition_angle: str
    verdict: str
    empty_neighbourhood: bool = False
    notes: tuple[str, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        def num(x):
            return "unbounded" if x == math.inf else x
        return {
            "lambda": self.lam,
            "lambda_source": self.lambda_source,
            "epsilon": self.epsilon,
            "stolz_sup": self.stolz_sup,
            "threshold_C": num(self.threshold_C),
            "threshold_C2": num(self.threshold_C2),
            "sigma": self.sigma,
            "condition_exponent": self.condition_exponent,
            "condition_angle": self.condition_angle,
            "verdict": self.verdict,
            "empty_neighbourhood": self.empty_neighbourhood,
            "notes": list(self.notes),
        }


def check_hypotheses(config: ChargeConfiguration, epsilon: float = DEFAULT_EPSILON,
                   sigma: float = 1.0, tau_grid=DEFAULT_TAU_GRID) -> HypothesisReport:
    """Evaluate summability, the convergence exponent and the Stolz-angle bound."""
    if config.model != DISC:
        raise ConstraintError("check_hypotheses needs a disc configuration")
    if not math.isfinite(config.total_weight + config.weight_tail_bound):
        raise ConstraintError("total weight is not finite")
    lam, src = exponent_of_convergence(config, tau_grid)
    sup, empty = stolz_angle_sup(config, epsilon)
    C = threshold_C(lam)
    C2 = threshold_C2(lam, sigma)
    cond_exp = "pass" if src == DECLARED else "unknown"
    cond_angle = "pass" if sup < C else "fail"
    notes = ["conditions are applied to every stored charge, not only to all but finitely many"]
    accumulates = config.family is not None and config.family.accumulates_at_one
    if cond_angle == "fail":
        verdict = FAIL
    elif cond_exp == "pass" and accumulates:
        verdict = HOLD
    else:
        verdict = INDETERMINATE
        if not accumulates:
            notes.append("charges do not accumulate at 1")
        if src == HEURISTIC:
            notes.append("lambda estimated from finitely many terms")
    return HypothesisReport(lam, src, float(epsilon), sup, C, C2, float(sigma),
                            cond_exp, cond_angle, verdict, empty, tuple(notes))


@dataclass(frozen=True)
class SectorProbe:
    """Sampled evidence about F on rays; never a proof."""

    angle_s0: float
    radius_range: tuple[float, float]
    observed_sup: float
    observed_liminf: float
    radii: np.ndarray = field(repr=False, default=None)
    samples: np.ndarray = field(repr=False, default=None)
    errors: np.ndarray = field(repr=False, default=None)
    sup_by_radius: np.ndarray = field(repr=False, default=None)
    reference: float | None = None
    closed_form: np.ndarray | None = field(repr=False, default=None)


def _halfplane(config: ChargeConfiguration) -> None:
    if config.model != HALF_PLANE:
        raise ConstraintError("probe needs a half-plane configuration")
    if not np.all(config.locations.real > 0):
        raise ConstraintError("probe needs every Re w_k > 0")


def _radii(r_values) -> np.ndarray:
    r = np.asarray(r_values, dtype=float)
    if r.ndim != 1 or len(r) == 0 or np.any(r <= 0):
        raise DomainError("radii must be a nonempty list of positive reals")
    return r


def _is_counterexample(config: ChargeConfiguration) -> bool:
    return config.family is not None and config.family.kind == "counterexample"


def negative_axis_probe(config: ChargeConfiguration, r_values) -> SectorProbe:
    """Sample r F(-r) along the negative axis.

    ``observed_liminf`` is the smallest r|F(-r)| seen.  For the zero-free
    example, ``reference`` is -(a + b) and ``closed_form`` holds r F(-r) from
    the closed form 1/((w - 2)(e^{w-1} + 1)).
    """
    _halfplane(config)
    r = _radii(r_values)
    vals, err = field_values(config, -r)
    samples = r * vals
    mags = np.abs(samples)
    ref = closed = None
    if _is_counterexample(config):
        ref = -(cf.A + cf.B)
        closed = r * cf.halfplane_F(-r + 0j)
    return SectorProbe(math.pi, (float(r.min()), float(r.max())), float(mags.max()), float(mags.min()),
                       r, samples, r * err, mags, ref, closed)


def sector_angle_sup(config: ChargeConfiguration) -> float:
    """sup |arg w_k| for large |w_k|: the family's limit angle, else the stored maximum."""
    if config.family is not None and config.family.accumulates_at_one:
        return config.family.limit_angle
    return float(np.max(np.abs(np.angle(config.locations))))


def sector_probe(config: ChargeConfiguration, s0: float, radii) -> SectorProbe:
    """Sample |F| on the rays arg w = ±s0 and arg w = π at the given radii."""
    _halfplane(config)
    r = _radii(radii)
    limit = sector_angle_sup(config)
    if not s0 > limit:
        raise DomainError(f"s0 = {s0} must exceed the pole angle {limit}")
    if not s0 <= math.pi:
        raise DomainError("s0 must not exceed pi")
    rays = np.exp(1j * np.array([s0, -s0, math.pi]))
    pts = (r[:, None] * rays[None, :]).ravel()
    vals, err = field_values(config, pts)
    mags = np.abs(vals).reshape(len(r), 3)
    neg = r * mags[:, 2]
    return SectorProbe(float(s0), (float(r.min()), float(r.max())), float(mags.max()), float(neg.min()),
                       r, vals.reshape(len(r), 3), err.reshape(len(r), 3), mags.max(axis=1))
