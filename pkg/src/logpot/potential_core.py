"""Charge configurations and evaluation of the field, its derivative and potential.

Two models are supported.  In the *disc* model a charge (a_k, z_k) contributes
a_k/(z - z_k) to f(z), with Re z_k < 1.  In the *half-plane* model the same
charge sits at w_k = 1/(1 - z_k) and contributes a_k w_k/(w - w_k) to F(w), with
Re w_k > 0.  The two are conjugate: f(z) = w F(w) for w = 1/(1 - z).

Every evaluation returns a :class:`TailBoundedValue`.  ``remainder`` bounds the
contribution of charges a family generator would add beyond the truncation;
``rounding`` bounds floating-point error of the partial sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closed_forms import EPS, pair_moment
from .errors import (
    ConstraintError,
    EmptyConfiguration,
    PoleProximity,
    SingularLocation,
)
from .families import FamilyGenerator

DISC = "disc"
HALF_PLANE = "half-plane"
MODELS = (DISC, HALF_PLANE)

#: Relative pole-proximity tolerance: |z - z_k| <= POLE_TOL * (1 + |z|) is refused.
POLE_TOL = 1e-14

_CHUNK = 1 << 21


def as_point(x) -> complex:
    """Coerce a number or an (re, im) pair into a finite complex number."""
    if isinstance(x, (tuple, list)):
        if len(x) != 2:
            raise ConstraintError(f"complex point needs two coordinates, got {x!r}")
        x = complex(float(x[0]), float(x[1]))
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ConstraintError(f"non-finite point {z!r}")
    return z


def disc_to_halfplane(z):
    """w = 1/(1 - z); maps the unit disc onto Re w > 1/2 and Re z < 1 onto Re w > 0."""
    return 1.0 / (1.0 - np.asarray(z, dtype=complex)) if np.ndim(z) else 1.0 / (1.0 - complex(z))


def halfplane_to_disc(w):
    """Inverse of :func:`disc_to_halfplane`."""
    return 1.0 - 1.0 / np.asarray(w, dtype=complex) if np.ndim(w) else 1.0 - 1.0 / complex(w)


@dataclass(frozen=True)
class PointCharge:
    weight: float
    location: complex

    def __post_init__(self):
        if not (math.isfinite(self.weight) and self.weight > 0):
            raise ConstraintError(f"charge weight must be positive and finite, got {self.weight!r}")
        object.__setattr__(self, "location", as_point(self.location))


@dataclass(frozen=True)
class TailBoundedValue:
    value: complex | float
    remainder: float
    rounding: float = 0.0

    @property
    def error(self) -> float:
        return self.remainder + self.rounding

    def contains(self, x, slack: float = 0.0) -> bool:
        return abs(x - self.value) <= self.error + slack


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ChargeConfiguration:
    """A finite truncation of a positive-weight charge family.

    Duplicate locations are merged by adding weights.  ``weight_tail_bound``
    bounds the total weight of charges not stored; all of them lie within
    ``tail_radius`` of z = 1.  For family configurations both are taken from the
    generator.
    """

    model: str
    charges: tuple[PointCharge, ...]
    family: FamilyGenerator | None = None
    weight_tail_bound: float = 0.0
    tail_radius: float = 0.0
    weights: np.ndarray = field(init=False, repr=False, compare=False)
    locations: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.model not in MODELS:
            raise ConstraintError(f"model must be one of {MODELS}, got {self.model!r}")
        merged: dict[complex, float] = {}
        for ch in self.charges:
            if not isinstance(ch, PointCharge):
                ch = PointCharge(*ch)
            merged[ch.location] = merged.get(ch.location, 0.0) + ch.weight
        charges = tuple(PointCharge(a, z) for z, a in merged.items())
        object.__setattr__(self, "charges", charges)
        weights = np.array([c.weight for c in charges], dtype=float)
        locs = np.array([c.location for c in charges], dtype=complex)
        for i, z in enumerate(locs):
            if self.model == DISC and not z.real < 1.0:
                raise ConstraintError(f"Re z_k < 1 violated at index {i}")
            if self.model == HALF_PLANE and not z.real > 0.0:
                raise ConstraintError(f"Re w_k > 0 violated at index {i}")
        if not (math.isfinite(self.weight_tail_bound) and self.weight_tail_bound >= 0):
            raise ConstraintError("weight_tail_bound must be finite and nonnegative")
        if self.weight_tail_bound > 0 and not self.tail_radius > 0:
            raise ConstraintError("a positive weight_tail_bound needs a positive tail_radius")
        if not math.isfinite(float(weights.sum()) + self.weight_tail_bound):
            raise ConstraintError("total weight is not finite")
        object.__setattr__(self, "weights", _frozen(weights))
        object.__setattr__(self, "locations", _frozen(locs))

    @classmethod
    def from_family(cls, family: FamilyGenerator, model: str = DISC) -> "ChargeConfiguration":
        if family.kind == "explicit":
            raise ConstraintError("explicit families carry no generator; list the charges")
        locs = family.disc_locations() if model == DISC else family.halfplane_locations()
        charges = tuple(PointCharge(float(a), complex(z)) for a, z in zip(family.weights(), locs))
        return cls(model, charges, family=family,
                   weight_tail_bound=family.tail_weight_bound(),
                   tail_radius=family.tail_radius())

    @classmethod
    def from_arrays(cls, weights, locations, model: str = DISC, **kw) -> "ChargeConfiguration":
        return cls(model, tuple(PointCharge(float(a), complex(z))
                                for a, z in zip(weights, locations)), **kw)

    def __len__(self) -> int:
        return len(self.charges)

    @property
    def total_weight(self) -> float:
        return math.fsum(self.weights)

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.locations.imag == 0.0))

    @property
    def corrected_tail(self) -> bool:
        # The counterexample's rearranged form loses the constant -Σ_tail c_k on
        # truncation; it is restored analytically.
        return self.family is not None and self.family.kind == "counterexample"


# ---------------------------------------------------------------------------
# Summation kernels
# ---------------------------------------------------------------------------

def _terms(config: ChargeConfiguration, pts: np.ndarray, kind: str) -> np.ndarray:
    d = pts[:, None] - config.locations[None, :]
    a = config.weights[None, :]
    if kind == "f":
        return a / d
    if kind == "df":
        return -a / (d * d)
    if kind == "u":
        return a * np.log(np.abs(d))
    coef = (config.weights * config.locations)[None, :]
    if kind == "F":
        return coef / d
    return -coef / (d * d)


def _check_pole(config: ChargeConfiguration, z: complex) -> None:
    dist = np.abs(z - config.locations)
    i = int(np.argmin(dist))
    if dist[i] <= POLE_TOL * (1.0 + abs(z)):
        raise PoleProximity(z, complex(config.locations[i]), float(dist[i]))


def _partial_sum_exact(config: ChargeConfiguration, z: complex, kind: str):
    """Correctly rounded sum of the computed terms (math.fsum), plus error bound."""
    t = _terms(config, np.array([z]), kind)[0]
    if kind == "u":
        s = math.fsum(t)
        rnd = 8 * EPS * math.fsum(config.weights * (np.abs(np.log(np.abs(z - config.locations))) + 1.0))
        return s, rnd + EPS * abs(s)
    s = complex(math.fsum(t.real), math.fsum(t.imag))
    rnd = 8 * EPS * math.fsum(np.abs(t)) + EPS * abs(s)
    return s, rnd


def _partial_sum_many(config: ChargeConfiguration, pts: np.ndarray, kind: str):
    n = len(config)
    rows = max(1, _CHUNK // max(n, 1))
    vals = np.empty(len(pts), dtype=float if kind == "u" else complex)
    rnd = np.empty(len(pts))
    factor = (8 + math.log2(max(n, 2))) * EPS
    with np.errstate(divide="ignore", invalid="ignore"):
        for lo in range(0, len(pts), rows):
            t = _terms(config, pts[lo:lo + rows], kind)
            vals[lo:lo + rows] = t.sum(axis=1)
            rnd[lo:lo + rows] = factor * np.abs(t).sum(axis=1)
    return vals, rnd + EPS * np.abs(vals)


def derivative_bound(config: ChargeConfiguration, centers, radii) -> np.ndarray:
    """Upper bound on |f'| (or |F'|) of the stored sum over each disc |x - c| <= r.

    Uses |f'(c)| plus r times a bound on |f''| over the disc, which stays tight
    where the terms cancel.  Infinite when a stored charge lies in the disc.
    Tails are not included.
    """
    centers = np.asarray(centers, dtype=complex)
    radii = np.asarray(radii, dtype=float)
    coef = config.weights if config.model == DISC else config.weights * config.locations
    acoef = np.abs(coef)
    rows = max(1, _CHUNK // max(len(config), 1))
    factor = (8 + math.log2(max(len(config), 2))) * EPS
    out = np.empty(len(centers))
    with np.errstate(divide="ignore", invalid="ignore"):
        for lo in range(0, len(centers), rows):
            c, r = centers[lo:lo + rows, None], radii[lo:lo + rows, None]
            diff = c - config.locations[None, :]
            t = coef[None, :] / (diff * diff)
            d = np.abs(diff) - r
            d = np.where(d > 0, d, 0.0)
            second = 2.0 * (acoef[None, :] / (d * d * d)).sum(axis=1)
            out[lo:lo + rows] = (np.abs(t.sum(axis=1)) + factor * np.abs(t).sum(axis=1)
                                 + radii[lo:lo + rows] * second)
    return np.where(np.isnan(out), np.inf, (1 + 4 * EPS) * out)

# ---------------------------------------------------------------------------
# Tail models
# ---------------------------------------------------------------------------

def _pair_tail(config: ChargeConfiguration, w: np.ndarray):
    """Omitted counterexample poles seen from the half-plane, as (correction, bound).

    Each omitted conjugate pair contributes -2c + c w 2s/(s^2 + y^2), s = w - 1.
    The constant and the leading 2wsc/y^2 part are summed in closed form; the
    rest is bounded by 2|w||s|^3 Σ y^-6 / (1 - |s|^2/y_min^2).
    """
    n = config.family.size
    y1 = (2 * n + 3) * math.pi
    t_est, t_err = config.family.tail_weight()
    p_est, p_err, q6 = pair_moment(n)
    s = w - 1.0
    sa = np.abs(s)
    wa = np.abs(w)
    corr = -t_est + 2.0 * w * s * p_est
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        bound = t_err + 2.0 * wa * sa * (p_err + sa**2 * q6 / (1.0 - (sa / y1) ** 2))
    return corr, np.where(sa < y1 / math.sqrt(2), bound, np.inf)


def _tail(config: ChargeConfiguration, pts: np.ndarray, kind: str):
    """(correction, bound) arrays for the omitted charges at ``pts``."""
    tb = config.weight_tail_bound
    zero = np.zeros(len(pts), dtype=float if kind == "u" else complex)
    if tb == 0.0:
        return zero, np.zeros(len(pts))
    rho = config.tail_radius
    inf = np.full(len(pts), np.inf)
    with np.errstate(divide="ignore", invalid="ignore"):
        if config.model == DISC:
            r = np.abs(pts - 1.0)
            d = r - rho
            ok = d > 0
            if not config.corrected_tail:
                if kind == "f":
                    bound = tb / d
                elif kind == "df":
                    bound = tb / d**2
                else:
                    bound = tb * np.maximum(np.abs(np.log(d)), np.abs(np.log(r + rho)))
                return zero, np.where(ok, bound, inf)
            t_est, t_err = config.family.tail_weight()
            if kind == "f":
                w = 1.0 / (1.0 - pts)
                corr, bound = _pair_tail(config, w)
                return w * corr, np.abs(w) * bound
            if kind == "df":
                corr = -t_est / (pts - 1.0) ** 2
                bound = tb * rho * (2 * r + rho) / (d**2 * r**2) + t_err / r**2
                return corr, np.where(ok, bound, inf)
            corr = t_est * np.log(r)
            bound = -tb * np.log1p(-rho / r) + t_err * np.abs(np.log(r))
            return corr, np.where(ok, bound, inf)

        big = 1.0 / rho
        m = np.abs(pts)
        ok = m < big
        if config.corrected_tail and kind == "F":
            return _pair_tail(config, pts)
        if kind == "F":
            bound = tb * big / (big - m)
        else:
            bound = tb * big / (big - m) ** 2
        return zero, np.where(ok, bound, inf)


# ---------------------------------------------------------------------------
# Public evaluation API
# ---------------------------------------------------------------------------

def _require(config: ChargeConfiguration, model: str) -> None:
    if len(config) == 0:
        raise EmptyConfiguration("configuration has no charges")
    if config.model != model:
        raise ConstraintError(f"operation needs a {model} configuration, got {config.model}")


def _evaluate(config: ChargeConfiguration, x, kind: str, model: str) -> TailBoundedValue:
    _require(config, model)
    x = as_point(x)
    _check_pole(config, x)
    s, rnd = _partial_sum_exact(config, x, kind)
    corr, bound = _tail(config, np.array([x]), kind)
    value = s + corr[0]
    if kind == "u":
        value = float(value)
    return TailBoundedValue(value, float(bound[0]), float(rnd))


def eval_f(config: ChargeConfiguration, z) -> TailBoundedValue:
    """f(z) = Σ a_k/(z - z_k) over a disc-model configuration."""
    return _evaluate(config, z, "f", DISC)


def eval_f_prime(config: ChargeConfiguration, z) -> TailBoundedValue:
    return _evaluate(config, z, "df", DISC)


def eval_potential_u(config: ChargeConfiguration, z) -> TailBoundedValue:
    """u(z) = Σ a_k log|z - z_k|; its gradient is conj(f)."""
    return _evaluate(config, z, "u", DISC)


def eval_F(config: ChargeConfiguration, w) -> TailBoundedValue:
    """F(w) = Σ a_k w_k/(w - w_k) over a half-plane configuration."""
    return _evaluate(config, w, "F", HALF_PLANE)


def eval_F_prime(config: ChargeConfiguration, w) -> TailBoundedValue:
    return _evaluate(config, w, "dF", HALF_PLANE)


def field_values(config: ChargeConfiguration, pts, derivative: bool = False, parts: bool = False):
    """Vectorized evaluation of the configuration's own field (f or F).

    Returns ``(values, error_bounds)``, or ``(values, remainders, rounding)``
    with ``parts``; points at a pole give non-finite values.  Uses pairwise
    rather than exactly rounded summation.
    """
    if len(config) == 0:
        raise EmptyConfiguration("configuration has no charges")
    pts = np.atleast_1d(np.asarray(pts, dtype=complex))
    if config.model == DISC:
        kind = "df" if derivative else "f"
    else:
        kind = "dF" if derivative else "F"
    vals, rnd = _partial_sum_many(config, pts, kind)
    corr, bound = _tail(config, pts, kind)
    if parts:
        return vals + corr, bound, rnd
    return vals + corr, bound + rnd


def potential_values(config: ChargeConfiguration, pts) -> np.ndarray:
    _require(config, DISC)
    pts = np.atleast_1d(np.asarray(pts, dtype=complex))
    vals, _ = _partial_sum_many(config, pts, "u")
    corr, _ = _tail(config, pts, "u")
    return vals + corr


def local_scale(config: ChargeConfiguration, x) -> float:
    """Σ |k-th term| at x: the natural magnitude against which |f| is judged."""
    kind = "f" if config.model == DISC else "F"
    t = _terms(config, np.array([complex(x)]), kind)[0]
    return math.fsum(np.abs(t))


# ---------------------------------------------------------------------------
# Conjugation between the models
# ---------------------------------------------------------------------------

def _mapped(config: ChargeConfiguration, model: str, locs: np.ndarray) -> ChargeConfiguration:
    if config.family is not None and config.family.kind != "explicit":
        return ChargeConfiguration.from_family(config.family, model)
    charges = tuple(PointCharge(c.weight, complex(z)) for c, z in zip(config.charges, locs))
    return ChargeConfiguration(model, charges, family=config.family,
                               weight_tail_bound=config.weight_tail_bound,
                               tail_radius=config.tail_radius)


def to_halfplane(config: ChargeConfiguration) -> ChargeConfiguration:
    """Map a disc configuration to the half-plane model, w_k = 1/(1 - z_k)."""
    if config.model != DISC:
        raise ConstraintError("to_halfplane needs a disc configuration")
    if np.any(config.locations == 1.0):
        raise SingularLocation("a charge sits at z = 1")
    return _mapped(config, HALF_PLANE, 1.0 / (1.0 - config.locations))


def to_disc(config: ChargeConfiguration) -> ChargeConfiguration:
    """Inverse of :func:`to_halfplane`, z_k = 1 - 1/w_k."""
    if config.model != HALF_PLANE:
        raise ConstraintError("to_disc needs a half-plane configuration")
    return _mapped(config, DISC, 1.0 - 1.0 / config.locations)


def poles_in_disc_image(config: ChargeConfiguration) -> bool:
    """Half-plane poles all in Re w > 1/2 (the image of the open unit disc)."""
    if config.model != HALF_PLANE:
        raise ConstraintError("needs a half-plane configuration")
    return bool(np.all(config.locations.real > 0.5))
