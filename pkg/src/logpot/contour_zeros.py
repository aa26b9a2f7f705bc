"""Argument-principle zero counting, quadtree isolation and Newton refinement.

Windings are computed by tracking arg f along the contour and bisecting any
segment that cannot be shown to turn by less than ``max_turn`` (π/2 by default).
A count is *certified* when every final segment has been accepted.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .errors import (
    BoundaryCharge,
    ConstraintError,
    ContourThroughPole,
    NoConvergence,
    PoleProximity,
    SubdivisionExhausted,
)
from .potential_core import (
    DISC,
    HALF_PLANE,
    ChargeConfiguration,
    eval_f,
    eval_F,
    eval_f_prime,
    eval_F_prime,
    derivative_bound,
    field_values,
    halfplane_to_disc,
    local_scale,
    to_disc,
    to_halfplane,
)

log = logging.getLogger(__name__)

NUDGE = 2.0**-10
BOUNDARY_TOL = 1e-8
MIN_BOX = 1e-12
MAX_SEGMENTS = 1 << 16
SPLIT_FRACTIONS = (0.4831, 0.5389, 0.4417, 0.5923, 0.4109, 0.6271, 0.3733, 0.6687, 0.3307)


@dataclass(frozen=True)
class ContourSpec:
    shape: str
    center: complex = 0j
    radius: float = 1.0
    corners: tuple[float, float, float, float] = (0.0, 0.0, 1.0, 1.0)
    initial_segments: int = 64
    max_subdivision_depth: int = 48

    def __post_init__(self):
        if self.shape == "circle":
            if not self.radius > 0:
                raise ConstraintError("circle radius must be positive")
        elif self.shape == "rectangle":
            x0, y0, x1, y1 = self.corners
            if not (x1 > x0 and y1 > y0):
                raise ConstraintError(f"degenerate rectangle {self.corners}")
        else:
            raise ConstraintError(f"unknown contour shape {self.shape!r}")
        if self.initial_segments < 4 or self.max_subdivision_depth < 1:
            raise ConstraintError("need >= 4 initial segments and a positive depth")

    @classmethod
    def circle(cls, center, radius, **kw) -> "ContourSpec":
        return cls("circle", center=complex(center), radius=float(radius), **kw)

    @classmethod
    def rectangle(cls, x0, y0, x1, y1, **kw) -> "ContourSpec":
        return cls("rectangle", corners=(float(x0), float(y0), float(x1), float(y1)), **kw)

    @property
    def scale(self) -> float:
        if self.shape == "circle":
            return self.radius
        x0, y0, x1, y1 = self.corners
        return math.hypot(x1 - x0, y1 - y0)

    @property
    def centroid(self) -> complex:
        if self.shape == "circle":
            return self.center
        x0, y0, x1, y1 = self.corners
        return complex((x0 + x1) / 2, (y0 + y1) / 2)

    def points(self, t) -> np.ndarray:
        """Counterclockwise parametrization on t in [0, 1]."""
        t = np.asarray(t, dtype=float)
        if self.shape == "circle":
            return self.center + self.radius * np.exp(2j * math.pi * t)
        x0, y0, x1, y1 = self.corners
        c = np.array([complex(x0, y0), complex(x1, y0), complex(x1, y1), complex(x0, y1), complex(x0, y0)])
        s = np.minimum(np.floor(4 * t).astype(int), 3)
        frac = 4 * t - s
        return c[s] + frac * (c[s + 1] - c[s])

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.shape == "circle":
            return np.abs(z - self.center) < self.radius
        x0, y0, x1, y1 = self.corners
        return (z.real > x0) & (z.real < x1) & (z.imag > y0) & (z.imag < y1)

    def boundary_distance(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.shape == "circle":
            return np.abs(np.abs(z - self.center) - self.radius)
        x0, y0, x1, y1 = self.corners
        dx = np.maximum(np.maximum(x0 - z.real, z.real - x1), 0.0)
        dy = np.maximum(np.maximum(y0 - z.imag, z.imag - y1), 0.0)
        outside = np.hypot(dx, dy)
        inside = np.minimum.reduce([z.real - x0, x1 - z.real, z.imag - y0, y1 - z.imag])
        return np.where(outside > 0, outside, np.abs(inside))

    def nudged(self) -> "ContourSpec":
        if self.shape == "circle":
            return replace(self, radius=self.radius * (1 + NUDGE))
        x0, y0, x1, y1 = self.corners
        dx, dy = NUDGE * (x1 - x0), NUDGE * (y1 - y0)
        return replace(self, corners=(x0 - dx, y0 - dy, x1 + dx, y1 + dy))


@dataclass(frozen=True)
class WindingResult:
    index: int
    certified: bool
    max_turn_per_segment: float
    segments_used: int
    resolved: bool = True
    nudges: int = 0
    contour: ContourSpec | None = field(default=None, compare=False)


def _call(func, pts):
    out = func(pts)
    if isinstance(out, tuple):
        vals, bounds = out
    else:
        vals, bounds = out, None
    return np.asarray(vals, dtype=complex), bounds


def winding_number(func: Callable, contour: ContourSpec, max_turn: float = math.pi / 2,
                   derivative_bound: Callable | None = None) -> WindingResult:
    """Winding of ``func`` around ``contour``: zeros minus poles inside.

    ``func`` maps an array of points to values, or to ``(values, error_bounds)``.
    A sample with |value| <= bound makes the argument meaningless there; the
    walk then stops and returns an uncertified result with ``resolved`` false.

    With ``derivative_bound(centers, radii)``, bounding |func'| on discs, a
    segment is accepted once 2 r L < |f(p0)| - bound on a disc of radius r
    covering it: f then stays in a half-plane around f(p0) along the segment.
    Without it a segment is accepted when its turn is below ``max_turn`` and
    its two halves add back up to it, which catches most hidden loops.
    """
    n0 = contour.initial_segments
    if contour.shape == "rectangle":
        # corners land on grid points, so every segment is straight
        n0 = 4 * max(1, n0 // 4)
    t = np.linspace(0.0, 1.0, n0 + 1)[:-1]
    pts = contour.points(t)
    vals, bounds = _call(func, pts)

    def check(v, b, p) -> bool:
        bad = ~np.isfinite(v) | (v == 0)
        if bad.any():
            raise ContourThroughPole(f"field vanishes or blows up on the contour near {p[bad][0]}")
        return b is None or not np.any(np.abs(v) <= np.asarray(b))

    def unresolved(n):
        return WindingResult(0, False, math.nan, n, False, 0, contour)

    if not check(vals, bounds, pts):
        return unresolved(n0)
    b_all = np.zeros(n0) if bounds is None else np.asarray(bounds, dtype=float)
    t0, t1 = t, np.append(t[1:], 1.0)
    p0, p1 = pts, np.append(pts[1:], pts[:1])
    v0, v1 = vals, np.append(vals[1:], vals[:1])
    b0 = b_all
    depth = np.zeros(n0, dtype=int)
    done = np.zeros(n0, dtype=bool)
    while True:
        todo = ~done & (depth < contour.max_subdivision_depth)
        if not todo.any() or len(t0) > MAX_SEGMENTS:
            break
        tm = 0.5 * (t0[todo] + t1[todo])
        pm = contour.points(tm)
        vm, bm = _call(func, pm)
        if not check(vm, bm, pm):
            return unresolved(len(t0))
        bm = np.zeros(len(pm)) if bm is None else np.asarray(bm, dtype=float)
        if derivative_bound is not None:
            r = np.maximum(np.abs(p0[todo] - pm), np.abs(p1[todo] - pm))
            accept = 2 * r * derivative_bound(pm, r) < np.abs(v0[todo]) - b0[todo]
        else:
            turn = np.angle(v1[todo] / v0[todo])
            left = np.angle(vm / v0[todo])
            right = np.angle(v1[todo] / vm)
            accept = ((np.abs(turn) < max_turn) & (np.abs(left) < max_turn) & (np.abs(right) < max_turn)
                      & (np.abs(left + right - turn) < 1e-9))
        idx = np.flatnonzero(todo)
        done[idx[accept]] = True
        sp = idx[~accept]
        if len(sp) == 0:
            continue
        tm, pm, vm, bm = tm[~accept], pm[~accept], vm[~accept], bm[~accept]
        keep = np.ones(len(t0), dtype=bool)
        keep[sp] = False
        t0 = np.concatenate([t0[keep], t0[sp], tm])
        t1 = np.concatenate([t1[keep], tm, t1[sp]])
        p0 = np.concatenate([p0[keep], p0[sp], pm])
        p1 = np.concatenate([p1[keep], pm, p1[sp]])
        v0 = np.concatenate([v0[keep], v0[sp], vm])
        v1 = np.concatenate([v1[keep], vm, v1[sp]])
        b0 = np.concatenate([b0[keep], b0[sp], bm])
        d = depth[sp] + 1
        depth = np.concatenate([depth[keep], d, d])
        done = np.concatenate([done[keep], np.zeros(2 * len(sp), dtype=bool)])
    turn = np.angle(v1 / v0)
    total = math.fsum(turn) / (2 * math.pi)
    index = int(round(total))
    max_abs = float(np.max(np.abs(turn)))
    certified = max_abs < max_turn and bool(done.all()) and abs(total - index) < 1e-6
    return WindingResult(index, certified, max_abs, len(turn), True, 0, contour)


def _field(config: ChargeConfiguration):
    # Zeros of a plain truncation are zeros of the stored sum, so rounding alone
    # decides whether a sample is meaningful.  A tail-corrected configuration
    # stands for the infinite series, so its remainder counts as well.
    with_tail = config.corrected_tail

    def func(pts):
        vals, rem, rnd = field_values(config, pts, parts=True)
        return vals, rnd + rem if with_tail else rnd
    return func


def _field_derivative_bound(config: ChargeConfiguration):
    # Only the stored sum has a cheap derivative bound; the tail-corrected
    # series falls back to the halving check.
    if config.corrected_tail:
        return None
    return lambda centers, radii: derivative_bound(config, centers, radii)


def field_winding(config: ChargeConfiguration, contour: ContourSpec) -> WindingResult:
    return winding_number(_field(config), contour, derivative_bound=_field_derivative_bound(config))


def _clear_contour(contour: ContourSpec, locations: np.ndarray, max_nudges: int = 16):
    nudges = 0
    while np.any(contour.boundary_distance(locations) <= BOUNDARY_TOL * contour.scale):
        if nudges == max_nudges:
            raise BoundaryCharge(f"charge within tolerance of contour {contour}")
        contour = contour.nudged()
        nudges += 1
    return contour, nudges


@dataclass(frozen=True)
class ZeroCount:
    count: int
    winding: WindingResult
    poles_inside: int
    contour: ContourSpec


def count_zeros_detailed(config: ChargeConfiguration, contour: ContourSpec) -> ZeroCount:
    contour, nudges = _clear_contour(contour, config.locations)
    res = field_winding(config, contour)
    res = replace(res, nudges=nudges)
    if not res.certified:
        raise SubdivisionExhausted(f"winding not certified on {contour}", res)
    inside = int(np.count_nonzero(contour.contains(config.locations)))
    return ZeroCount(res.index + inside, res, inside, contour)


def count_zeros(config: ChargeConfiguration, contour: ContourSpec) -> int:
    """Zeros inside ``contour``: winding plus the charges (simple poles) inside."""
    return count_zeros_detailed(config, contour).count


# ---------------------------------------------------------------------------
# Newton refinement
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroRecord:
    location: complex
    residual: float
    iterations: int
    enclosure: ContourSpec | None = None
    certified: bool = True
    multiplicity: int = 1
    annulus: int | None = None
    halfplane_location: complex | None = None


def _evaluators(config: ChargeConfiguration):
    if config.model == DISC:
        return eval_f, eval_f_prime
    return eval_F, eval_F_prime


def _real_refine(config, x: float, f, fp, max_iter: int = 200):
    poles = np.sort(config.locations.real)
    i = int(np.searchsorted(poles, x))
    if i == 0 or i == len(poles):
        return None
    lo, hi = float(poles[i - 1]), float(poles[i])
    for it in range(1, max_iter + 1):
        v = f(config, x).value.real
        scale = local_scale(config, x)
        if abs(v) <= 1e-12 * scale:
            return x, it
        if v > 0:
            lo = x
        else:
            hi = x
        d = fp(config, x).value.real
        step = v / d if d != 0 else math.inf
        nx = x - step
        if not lo < nx < hi:
            nx = 0.5 * (lo + hi)
        if nx == x or hi - lo <= 4 * np.spacing(max(abs(lo), abs(hi))):
            return x, it
        x = nx
    return x, max_iter


def refine_zero(config: ChargeConfiguration, seed, max_iter: int = 50) -> ZeroRecord:
    """Newton iteration on f (disc) or F (half-plane) from ``seed``.

    For real configurations and a real seed between two charges, a bracketed
    Newton-bisection on the real line is used instead; complex iterates that
    end within rounding of the axis are finished the same way.
    """
    f, fp = _evaluators(config)
    z = complex(seed)
    f(config, z)  # propagates PoleProximity for a seed at a pole
    if config.is_real and z.imag == 0.0:
        out = _real_refine(config, z.real, f, fp)
        if out is not None:
            x, it = out
            return ZeroRecord(complex(x, 0.0), abs(f(config, x).value), it)

    def done(z, it):
        # real configurations have conjugate-symmetric zeros; one within
        # rounding of the axis is real, so finish it on the line
        if config.is_real and z.imag != 0.0 and abs(z.imag) <= 1e-12 * max(abs(z), 1.0):
            out = _real_refine(config, z.real, f, fp)
            if out is not None:
                return ZeroRecord(complex(out[0], 0.0), abs(f(config, out[0]).value), it + out[1])
        return ZeroRecord(z, abs(f(config, z).value), it)

    for it in range(1, max_iter + 1):
        v = f(config, z).value
        if abs(v) <= 1e-12 * local_scale(config, z):
            return done(z, it)
        d = fp(config, z).value
        if d == 0:
            break
        step = v / d
        z = z - step
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            break
        if abs(step) <= 1e-14 * max(abs(z), 1e-300):
            return done(z, it)
    raise NoConvergence(f"Newton did not converge from {seed!r}", z)


# ---------------------------------------------------------------------------
# Quadtree isolation
# ---------------------------------------------------------------------------

def _as_rectangle(region) -> ContourSpec:
    if isinstance(region, ContourSpec):
        if region.shape != "rectangle":
            raise ConstraintError("isolate_zeros needs a rectangular region")
        return region
    return ContourSpec.rectangle(*region)


def _split(box: ContourSpec, locations: np.ndarray, attempt: int):
    x0, y0, x1, y1 = box.corners
    w, h = x1 - x0, y1 - y0
    inside = locations[(locations.real >= x0) & (locations.real <= x1)
                       & (locations.imag >= y0) & (locations.imag <= y1)]

    def pick(lo, span, coords):
        scored = []
        for f in SPLIT_FRACTIONS:
            c = lo + f * span
            gap = np.min(np.abs(coords - c)) / span if len(coords) else 1.0
            scored.append((gap >= 1e-3, -SPLIT_FRACTIONS.index(f), f))
        good = [s for s in scored if s[0]]
        order = sorted(good, key=lambda s: -s[1]) or sorted(scored, reverse=True)
        return lo + order[attempt % len(order)][2] * span

    xm = pick(x0, w, inside.real)
    ym = pick(y0, h, inside.imag)
    kw = dict(initial_segments=box.initial_segments, max_subdivision_depth=box.max_subdivision_depth)
    return [ContourSpec.rectangle(x0, y0, xm, ym, **kw), ContourSpec.rectangle(xm, y0, x1, ym, **kw),
            ContourSpec.rectangle(x0, ym, xm, y1, **kw), ContourSpec.rectangle(xm, ym, x1, y1, **kw)]


def _box_count(config: ChargeConfiguration, box: ContourSpec):
    res = field_winding(config, box)
    inside = int(np.count_nonzero(box.contains(config.locations)))
    return res, res.index + inside


def _seeds(config: ChargeConfiguration, box: ContourSpec):
    c = box.centroid
    x0, y0, x1, y1 = box.corners
    if config.is_real and y0 < 0.0 < y1:
        yield complex(c.real, 0.0)
    yield c
    corners = np.array([complex(x0, y0), complex(x1, y0), complex(x1, y1), complex(x0, y1)])
    inset = c + (corners - c) * 0.9
    vals, _ = field_values(config, inset)
    for i in np.argsort(np.abs(vals))[:3]:
        yield complex(inset[i])


def _in_box(z: complex, box: ContourSpec) -> bool:
    x0, y0, x1, y1 = box.corners
    tol = 1e-12 * box.scale
    return x0 - tol <= z.real <= x1 + tol and y0 - tol <= z.imag <= y1 + tol


def _try_refine(config, box):
    for seed in _seeds(config, box):
        try:
            rec = refine_zero(config, seed)
        except (NoConvergence, PoleProximity, ArithmeticError):
            continue
        if _in_box(rec.location, box):
            return replace(rec, enclosure=box)
    return None


def isolate_zeros(config: ChargeConfiguration, region, min_box: float = MIN_BOX) -> list[ZeroRecord]:
    """All zeros of the configuration's field inside a rectangle.

    Boxes are split into four until each holds at most one zero, which is then
    refined by Newton.  Boxes smaller than ``min_box`` times the region size
    that still hold several zeros come back as one uncertified cluster record.
    """
    top = _as_rectangle(region)
    top, _ = _clear_contour(top, config.locations)
    res, n_top = _box_count(config, top)
    if not res.certified:
        raise SubdivisionExhausted(f"top-level winding not certified on {top}", res)
    smallest = min_box * top.scale
    records: list[ZeroRecord] = []
    stack = [(top, n_top)]
    while stack:
        box, n = stack.pop()
        if n <= 0:
            if n < 0:
                raise SubdivisionExhausted(f"negative zero count {n} in {box}")
            continue
        if n == 1:
            rec = _try_refine(config, box)
            if rec is not None:
                records.append(rec)
                continue
        if box.scale <= smallest:
            v, _ = field_values(config, [box.centroid])
            records.append(ZeroRecord(box.centroid, float(abs(v[0])), 0, box, certified=False, multiplicity=n))
            continue
        for attempt in range(len(SPLIT_FRACTIONS)):
            children = _split(box, config.locations, attempt)
            counted = [_box_count(config, ch) for ch in children]
            if all(r.certified for r, _ in counted) and sum(c for _, c in counted) == n:
                break
            log.debug("split attempt %d of %s inconsistent; retrying", attempt, box)
        else:
            raise SubdivisionExhausted(f"could not split {box} consistently")
        stack.extend((ch, c) for ch, (_, c) in zip(children, counted))

    records = _merge(records, top.scale)
    total = sum(r.multiplicity for r in records)
    if total != n_top:
        raise SubdivisionExhausted(f"found {total} zeros, winding count says {n_top}")
    return sorted(records, key=lambda r: (r.location.real, r.location.imag))


def _merge(records: list[ZeroRecord], scale: float) -> list[ZeroRecord]:
    out: list[ZeroRecord] = []
    for r in records:
        if any(abs(r.location - o.location) <= 1e-9 * max(scale, abs(o.location)) for o in out):
            continue
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# Zeros approaching the boundary point 1
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundarySearch:
    zeros: list[ZeroRecord]
    empty_annuli: list[int]
    unresolved_annuli: list[int]


def annulus_boxes(j: int) -> list[ContourSpec]:
    """Rectangles covering 2^j <= |w| <= 2^{j+1} and avoiding |w| < 2^{j-1/2}."""
    r = 2.0**j
    o, i = 2 * r, r / math.sqrt(2)
    return [ContourSpec.rectangle(-o, -o, -i, o), ContourSpec.rectangle(i, -o, o, o),
            ContourSpec.rectangle(-i, i, i, o), ContourSpec.rectangle(-i, -o, i, -i)]


def zero_sequence_toward_boundary(config: ChargeConfiguration, depth: int, first: int = 1) -> BoundarySearch:
    """Zeros η with 2^{-j-1} <= |1 - η| < 2^{-j} for j = first..depth.

    The search runs in the half-plane coordinate w = 1/(1 - z), where the dyadic
    annuli become |w| in [2^j, 2^{j+1}) and points near 1 keep full relative
    precision.  Residuals are |f(η)| = |w F(w)| at the refined w.
    """
    if config.model != DISC:
        raise ConstraintError("zero_sequence_toward_boundary needs a disc configuration")
    hp = to_halfplane(config)
    zeros: list[ZeroRecord] = []
    empty: list[int] = []
    unresolved: list[int] = []
    for j in range(first, depth + 1):
        lo, hi = 2.0**j, 2.0 ** (j + 1)
        found: list[ZeroRecord] = []
        resolved = True
        for box in annulus_boxes(j):
            box, _ = _clear_contour(box, hp.locations)
            if not field_winding(hp, box).resolved:
                # |F| sits below its error bound somewhere on the box edge
                resolved = False
                continue
            try:
                recs = isolate_zeros(hp, box)
            except SubdivisionExhausted as exc:
                log.warning("annulus %d: %s", j, exc)
                resolved = False
                continue
            for rec in recs:
                w = rec.location
                if lo <= abs(w) < hi and not any(abs(w - o.halfplane_location) <= 1e-9 * abs(w) for o in found):
                    found.append(rec_to_disc(hp, rec, j))
        if not resolved:
            unresolved.append(j)
        if not found:
            log.info("no zero found in annulus %d", j)
            empty.append(j)
        zeros.extend(sorted(found, key=lambda r: -abs(1.0 - r.location)))
    return BoundarySearch(zeros, empty, unresolved)


def rec_to_disc(hp: ChargeConfiguration, rec: ZeroRecord, annulus: int | None = None) -> ZeroRecord:
    w = rec.location
    eta = halfplane_to_disc(w)
    residual = abs(w) * abs(eval_F(hp, w).value) if rec.certified else rec.residual * abs(w)
    if not (1.0 / w).real > 0:
        raise ConstraintError(f"zero {eta} is not in Re z < 1")
    return replace(rec, location=eta, residual=residual, annulus=annulus, halfplane_location=w)


# ---------------------------------------------------------------------------
# Gauss-Lucas containment
# ---------------------------------------------------------------------------

def _cross(o, a, b) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points) -> list[complex]:
    """Counterclockwise hull vertices (monotone chain); collinear input gives the two endpoints."""
    pts = sorted(set(complex(p) for p in points), key=lambda p: (p.real, p.imag))
    if len(pts) <= 2:
        return pts
    lower: list[complex] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[complex] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _segment_distance(p: complex, a: complex, b: complex) -> tuple[float, complex]:
    ab = b - a
    L2 = abs(ab) ** 2
    t = 0.0 if L2 == 0 else min(1.0, max(0.0, ((p - a) * ab.conjugate()).real / L2))
    q = a + t * ab
    return abs(p - q), q


def nearest_hull_point(hull: list[complex], p: complex) -> complex:
    if len(hull) == 1:
        return hull[0]
    edges = zip(hull, hull[1:] + hull[:1])
    return min((_segment_distance(p, a, b) for a, b in edges), key=lambda t: t[0])[1]


def in_hull(hull: list[complex], p: complex, tol: float) -> bool:
    if len(hull) <= 2:
        a, b = hull[0], hull[-1]
        return _segment_distance(p, a, b)[0] <= tol
    scale = max(abs(b - a) for a, b in zip(hull, hull[1:] + hull[:1]))
    return all(_cross(a, b, p) >= -tol * scale for a, b in zip(hull, hull[1:] + hull[:1]))


def _disc_view(zeros, config: ChargeConfiguration):
    locs = [r.location if isinstance(r, ZeroRecord) else complex(r) for r in zeros]
    if config.model == HALF_PLANE:
        return [complex(halfplane_to_disc(z)) for z in locs], to_disc(config)
    return locs, config


def convex_hull_containment(zeros, config: ChargeConfiguration, tol: float = 1e-12) -> list[bool]:
    """Whether each zero lies in the convex hull of the charge locations (disc coordinates)."""
    locs, disc = _disc_view(zeros, config)
    hull = convex_hull(disc.locations)
    diam = max((abs(a - b) for a in hull for b in hull), default=0.0)
    return [in_hull(hull, z, tol * max(diam, 1.0)) for z in locs]


def gauss_lucas_witness(config: ChargeConfiguration, point) -> tuple[complex, float] | None:
    """For a point outside the hull: a direction d with Re((z_k - η)/d) > 0 for all k,
    and Re(d f(η)), which is then negative.  None for points inside the hull.
    """
    (p,), disc = _disc_view([point], config)
    hull = convex_hull(disc.locations)
    diam = max((abs(a - b) for a in hull for b in hull), default=1.0)
    if in_hull(hull, p, 1e-12 * max(diam, 1.0)):
        return None
    d = nearest_hull_point(hull, p) - p
    return d, (d * eval_f(disc, p).value).real

