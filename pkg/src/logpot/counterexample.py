"""The explicit zero-free function and the certificates built around it.

g(w) = 1/(w(w-2)(e^{w-1}+1)) has no zeros and simple poles at 0, 2 and
u_k = 1 + (2k+1)πi.  Its partial-fraction expansion

    h(w) = -a/w + b/(w-2) + Σ_k c_k/(w - u_k)

coincides with g, and F(w) = w h(w) is a half-plane field with positive weights
and no zeros at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import closed_forms as cf
from .contour_zeros import ContourSpec, WindingResult, winding_number
from .errors import ContourThroughPole, DomainError, PoleProximity
from .families import counterexample as counterexample_family
from .potential_core import (
    HALF_PLANE,
    ChargeConfiguration,
    TailBoundedValue,
    field_values,
)

G_POLE_TOL = 1e-12


@dataclass(frozen=True)
class CounterexampleModel:
    """Residues and poles of g, truncated to the poles u_k with -N-1 <= k <= N.

    ``c`` and ``u`` are stored in conjugate pairs (k, -k-1) so that
    ``u[2i+1] == conj(u[2i])`` and ``c[2i+1] == c[2i]``.
    """

    a: float
    b: float
    half_width: int
    c: np.ndarray
    u: np.ndarray
    tail: float

    @property
    def indices(self) -> np.ndarray:
        return cf.kept_indices(self.half_width)


def build_model(half_width: int = 10_000) -> CounterexampleModel:
    if half_width < 1:
        raise DomainError("half_width must be a positive integer")
    idx = cf.kept_indices(half_width)
    c = cf.residue_c(idx)
    u = cf.pole_u(idx)
    c.setflags(write=False)
    u.setflags(write=False)
    return CounterexampleModel(cf.A, cf.B, half_width, c, u, cf.tail_weight_bound(half_width))


def residues(k: int | None = None):
    """(a, b) or (a, b, c_k)."""
    if k is None:
        return cf.A, cf.B
    return cf.A, cf.B, cf.residue_c(k)


def _nearest_g_pole(w: complex) -> complex:
    k = round((w.imag / math.pi - 1.0) / 2.0)
    cands = [0j, 2 + 0j, cf.pole_u(k)]
    return min(cands, key=lambda p: abs(w - p))


def eval_g(w, return_flag: bool = False):
    """Closed-form g(w).

    For very large Re w, e^{w-1} overflows and g is returned as 0; with
    ``return_flag`` the result is ``(value, underflowed)``.
    """
    w = complex(w)
    p = _nearest_g_pole(w)
    if abs(w - p) <= G_POLE_TOL:
        raise PoleProximity(w, p, abs(w - p))
    underflow = w.real - 1.0 > 709.0
    value = 0j if underflow else cf.g(w)
    return (value, underflow) if return_flag else value


def _h_pair_terms(model: CounterexampleModel, w: complex) -> np.ndarray:
    s = w - 1.0
    y = np.abs(model.u[0::2].imag)
    return model.c[0::2] * 2.0 * s / (s * s + y * y)


def _omitted_distance(model: CounterexampleModel, w: complex) -> float:
    y1 = (2 * model.half_width + 3) * math.pi
    return math.hypot(w.real - 1.0, max(0.0, y1 - abs(w.imag)))


def eval_h(model: CounterexampleModel, w) -> TailBoundedValue:
    """Truncated partial-fraction sum h_N(w), conjugate poles summed in pairs."""
    w = complex(w)
    dmin = min(abs(w), abs(w - 2.0), float(np.min(np.abs(w - model.u))))
    if dmin <= G_POLE_TOL:
        p = _nearest_g_pole(w)
        raise PoleProximity(w, p, dmin)
    terms = np.concatenate([[-model.a / w, model.b / (w - 2.0)], _h_pair_terms(model, w)])
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    rounding = 8 * cf.EPS * math.fsum(np.abs(terms)) + cf.EPS * abs(value)
    return TailBoundedValue(value, model.tail / _omitted_distance(model, w), rounding)


def residue_identity(model: CounterexampleModel) -> tuple[float, TailBoundedValue]:
    """lhs = a, rhs = b + Σ_{kept} c_k with the omitted Σ c_k as remainder."""
    s = math.fsum(model.c)
    rhs = model.b + s
    return model.a, TailBoundedValue(rhs, model.tail, 4 * cf.EPS * rhs)


def identity_certified(model: CounterexampleModel) -> bool:
    lhs, rhs = residue_identity(model)
    return abs(lhs - rhs.value) <= rhs.error


def as_halfplane_config(model: CounterexampleModel) -> ChargeConfiguration:
    """The half-plane form F(w) = Σ d_k v_k/(w - v_k): d = b at v = 2, d = c_k at v = u_k."""
    config = ChargeConfiguration.from_family(counterexample_family(model.half_width), HALF_PLANE)
    if not np.all(config.locations.real >= 1.0):
        raise AssertionError("half-plane form must keep every pole in Re v >= 1")
    return config


def remark_check(config: ChargeConfiguration) -> np.ndarray:
    """a_k conj(v_k) for each term with a_k = d_k v_k; all are d_k |v_k|^2 > 0."""
    coef = config.weights * config.locations
    return coef * np.conj(config.locations)


@dataclass(frozen=True)
class LCertificate:
    max_difference: float
    max_remainder: float
    max_rounding: float
    points: int
    certified: bool


def certify_L(model: CounterexampleModel, radii=(2.0, 6.0), points: int = 64) -> LCertificate:
    """Check |h_N - g| <= remainder (+ rounding) on circles |w - 1| = r."""
    worst_diff = worst_rem = worst_rnd = 0.0
    ok = True
    theta = 2 * math.pi * (np.arange(points) + 0.5) / points
    for r in radii:
        for w in 1.0 + r * np.exp(1j * theta):
            hv = eval_h(model, w)
            gv = eval_g(w)
            diff = abs(hv.value - gv)
            g_rnd = 16 * cf.EPS * abs(gv)
            ok &= diff <= hv.remainder + hv.rounding + g_rnd
            worst_diff = max(worst_diff, diff)
            worst_rem = max(worst_rem, hv.remainder)
            worst_rnd = max(worst_rnd, hv.rounding + g_rnd)
    return LCertificate(worst_diff, worst_rem, worst_rnd, points * len(radii), bool(ok))


@dataclass(frozen=True)
class ZeroFreeCertificate:
    m: int
    radius: float
    winding_g: WindingResult
    winding_F: WindingResult
    poles_g: int
    poles_F: int
    series_gap: float
    certified: bool

    @property
    def zeros_g(self) -> int:
        return self.winding_g.index + self.poles_g

    @property
    def zeros_F(self) -> int:
        return self.winding_F.index + self.poles_F


def _poles_inside(radius: float) -> int:
    # 0 and 2 sit at distance 1 from the centre; u_k at distance |2k+1|π
    odd = int(math.ceil(radius / math.pi))
    n_u = 2 * sum(1 for n in range(1, odd + 1, 2) if n * math.pi < radius)
    return 2 + n_u


def certify_zero_free(model: CounterexampleModel, m: int, series_points: int = 128) -> ZeroFreeCertificate:
    """Count zeros of g and F = w g inside |w - 1| = 4mπ by the argument principle.

    The winding of F uses the closed form w g(w); ``series_gap`` records the
    largest excess of |F_series - w g| over the series error bound on the
    contour (<= 0 means the truncated series agrees wherever it is resolved).
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    if model.half_width < 2 * m - 1:
        raise DomainError(f"half_width {model.half_width} drops poles inside |w-1| = {4 * m}π")
    radius = 4 * m * math.pi
    for p in (0j, 2 + 0j, *cf.pole_u(np.arange(-2 * m - 1, 2 * m + 1))):
        if abs(abs(p - 1.0) - radius) <= 1e-8 * radius:
            raise ContourThroughPole(f"pole {p} lies on |w-1| = {radius}")
    contour = ContourSpec.circle(1.0, radius, initial_segments=256)
    wg = winding_number(cf.g, contour)
    wF = winding_number(cf.halfplane_F, contour)
    n_g = _poles_inside(radius)
    n_F = n_g - 1

    pts = contour.points(np.arange(series_points) / series_points)
    vals, err = field_values(as_halfplane_config(model), pts)
    gap = float(np.max(np.abs(vals - cf.halfplane_F(pts)) - err - 16 * cf.EPS * np.abs(vals)))

    ok = (wg.certified and wF.certified
          and wg.index + n_g == 0 and wF.index + n_F == 0)
    return ZeroFreeCertificate(m, radius, wg, wF, n_g, n_F, gap, bool(ok))


@dataclass(frozen=True)
class DecayProbe:
    radii: np.ndarray
    max_g: np.ndarray
    max_h: np.ndarray
    g_exponent: float
    h_decreasing: bool


def decay_probe(model: CounterexampleModel, ms=(1, 2, 3), points: int = 256) -> DecayProbe:
    """Sampled sup of |g| and |h_N| on |w - 1| = 4mπ and the fitted decay rate of |g|."""
    radii = np.array([4 * m * math.pi for m in ms])
    theta = 2 * math.pi * (np.arange(points) + 0.5) / points
    max_g, max_h = [], []
    for r in radii:
        ws = 1.0 + r * np.exp(1j * theta)
        max_g.append(float(np.max(np.abs(cf.g(ws)))))
        max_h.append(max(abs(eval_h(model, w).value) for w in ws))
    max_g = np.array(max_g)
    max_h = np.array(max_h)
    slope = np.polyfit(np.log(radii), np.log(max_g), 1)[0]
    return DecayProbe(radii, max_g, max_h, float(-slope), bool(np.all(np.diff(max_h) < 0)))
