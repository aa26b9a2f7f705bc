"""Closed forms attached to the zero-free example g(w) = 1/(w(w-2)(e^{w-1}+1)).

Pole indexing: u_k = 1 + (2k+1)πi.  A truncation of half-width N keeps the
conjugate-symmetric block k = -N-1, ..., N, i.e. every pole with
|2k+1| <= 2N+1.  The omitted poles are then exactly the odd n = |2k+1| >= 2N+3,
each occurring twice (once above and once below the real axis).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import zeta

EPS = np.finfo(float).eps

#: Residue of g at 0 is -A; residue at 2 is B.
A = 1.0 / (2.0 * (math.exp(-1.0) + 1.0))
B = 1.0 / (2.0 * (math.e + 1.0))


def residue_c(k):
    """c_k = 1/((2k+1)^2 π^2 + 1); accepts scalars or integer arrays."""
    n = 2 * np.asarray(k, dtype=float) + 1
    out = 1.0 / (n * n * math.pi**2 + 1.0)
    return float(out) if np.ndim(out) == 0 else out


def pole_u(k):
    n = 2 * np.asarray(k, dtype=float) + 1
    out = 1.0 + 1j * math.pi * n
    return complex(out) if np.ndim(out) == 0 else out


def kept_indices(half_width: int) -> np.ndarray:
    """Indices ordered in conjugate pairs: 0, -1, 1, -2, ..., N, -N-1."""
    k = np.arange(half_width + 1)
    return np.column_stack([k, -k - 1]).ravel()


def odd_power_sum(power: float, first: int) -> float:
    """Σ n^{-power} over odd n >= first (first odd, power > 1)."""
    return float(2.0**-power * zeta(power, first / 2.0))


def tail_weight(half_width: int) -> tuple[float, float]:
    """Σ of c_k over omitted poles as (estimate, absolute error bound).

    Uses 1/(x+1) = Σ_j (-1)^j x^{-j-1} with x = n^2 π^2 >= 25π^2, so the
    truncation error is below the first dropped term.
    """
    first = 2 * half_width + 3
    total = 0.0
    term = 0.0
    for j in range(8):
        term = math.pi ** (-2 * (j + 1)) * odd_power_sum(2 * (j + 1), first)
        total += (-1) ** j * term
    next_term = math.pi**-18 * odd_power_sum(18, first)
    estimate = 2.0 * total
    return estimate, 2.0 * next_term + 16 * EPS * estimate


def tail_weight_bound(half_width: int) -> float:
    """Integral-comparison bound 1/(2π^2(N+1)) on the omitted Σ c_k.

    Midpoint convexity gives Σ_{odd n>=M} n^{-2} <= 1/(2(M-1)); with M = 2N+3
    and two copies of each n this is 1/(2π^2(N+1)) <= 1/(2π^2 N).
    """
    return 1.0 / (2.0 * math.pi**2 * (half_width + 1))


def pair_moment(half_width: int) -> tuple[float, float, float]:
    """Moments of the omitted pairs, indexed by odd n >= 2N+3 with y_n = nπ.

    Returns (P, P_err, Q6): P = Σ c_n / y_n^2 with absolute error P_err, and
    Q6 = Σ y_n^{-6} as an upper bound.
    """
    first = 2 * half_width + 3
    total = 0.0
    for j in range(6):
        total += (-1) ** j * math.pi ** (-2 * (j + 2)) * odd_power_sum(2 * (j + 2), first)
    err = math.pi**-16 * odd_power_sum(16, first) + 16 * EPS * total
    q6 = math.pi**-6 * odd_power_sum(6, first) * (1 + 1e-12)
    return total, err, q6


def g(w):
    """The zero-free meromorphic function 1/(w(w-2)(e^{w-1}+1))."""
    w = np.asarray(w, dtype=complex)
    out = 1.0 / (w * (w - 2.0) * (np.exp(w - 1.0) + 1.0))
    return complex(out) if np.ndim(out) == 0 else out


def halfplane_F(w):
    """F(w) = w g(w) = 1/((w-2)(e^{w-1}+1)), the closed form of the half-plane series."""
    w = np.asarray(w, dtype=complex)
    out = 1.0 / ((w - 2.0) * (np.exp(w - 1.0) + 1.0))
    return complex(out) if np.ndim(out) == 0 else out
