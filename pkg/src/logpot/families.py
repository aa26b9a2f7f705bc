"""Rules producing the k-th charge of an infinite family accumulating at z = 1.

Each family knows, besides its charges, how the discarded tail behaves: a
rigorous bound on the omitted weight, and a radius rho such that every omitted
charge satisfies |1 - z_k| <= rho.  Half-plane locations are produced directly
(w_k = 1/(1 - z_k)) so that charges very close to 1 keep full relative precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

from . import closed_forms
from .errors import ConstraintError

KINDS = ("geometric", "power-law", "counterexample", "explicit")


@dataclass(frozen=True)
class FamilyGenerator:
    """A charge family truncated to ``size`` terms.

    ``size`` is the term count for geometric and power-law families and the
    half-width N for the counterexample (poles u_k with -N-1 <= k <= N kept,
    plus the charge at w = 2).  ``explicit`` families carry only metadata about
    charges listed by hand.
    """

    kind: str
    size: int = 0
    ratio: float = 0.5
    exponent: float = 1.0
    angle: float = 0.0
    weight_exponent: float = 2.0
    lam: float | None = None
    accumulates: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConstraintError(f"unknown family kind {self.kind!r}")
        if self.kind != "explicit" and self.size < 1:
            raise ConstraintError(f"{self.kind} family needs a positive size, got {self.size}")
        if self.kind == "geometric" and not 0.0 < self.ratio < 1.0:
            raise ConstraintError(f"geometric ratio must lie in (0, 1), got {self.ratio}")
        if self.kind == "power-law":
            if self.exponent <= 0:
                raise ConstraintError(f"power-law exponent must be > 0, got {self.exponent}")
            if not abs(self.angle) < math.pi / 2:
                raise ConstraintError("power-law angle must satisfy |angle| < pi/2 (Re z_k < 1)")
            if self.weight_exponent <= 1:
                raise ConstraintError("power-law weight_exponent must exceed 1 (summable weights)")
        if self.kind == "explicit" and self.lam is not None and self.lam < 0:
            raise ConstraintError("declared lambda must be nonnegative")

    # -- charges -------------------------------------------------------------

    def weights(self) -> np.ndarray:
        if self.kind == "geometric":
            return self.ratio ** np.arange(1, self.size + 1, dtype=float)
        if self.kind == "power-law":
            return np.arange(1, self.size + 1, dtype=float) ** -self.weight_exponent
        if self.kind == "counterexample":
            idx = closed_forms.kept_indices(self.size)
            return np.concatenate([[closed_forms.B], closed_forms.residue_c(idx)])
        return np.empty(0)

    def halfplane_locations(self) -> np.ndarray:
        if self.kind == "geometric":
            return (1.0 / self.ratio) ** np.arange(1, self.size + 1, dtype=float) + 0j
        if self.kind == "power-law":
            k = np.arange(1, self.size + 1, dtype=float)
            return k**self.exponent * np.exp(-1j * self.angle)
        if self.kind == "counterexample":
            idx = closed_forms.kept_indices(self.size)
            return np.concatenate([[2.0 + 0j], closed_forms.pole_u(idx)])
        return np.empty(0, dtype=complex)

    def disc_locations(self) -> np.ndarray:
        if self.kind == "geometric":
            return 1.0 - self.ratio ** np.arange(1, self.size + 1, dtype=float) + 0j
        if self.kind == "power-law":
            k = np.arange(1, self.size + 1, dtype=float)
            return 1.0 - k**-self.exponent * np.exp(1j * self.angle)
        return 1.0 - 1.0 / self.halfplane_locations()

    # -- tail ----------------------------------------------------------------

    def tail_weight_bound(self) -> float:
        """Rigorous upper bound on the weight of all omitted charges."""
        n = self.size
        if self.kind == "geometric":
            return self.ratio ** (n + 1) / (1.0 - self.ratio)
        if self.kind == "power-law":
            s = self.weight_exponent
            return n ** (1.0 - s) / (s - 1.0)
        if self.kind == "counterexample":
            return closed_forms.tail_weight_bound(n)
        return 0.0

    def tail_weight(self) -> tuple[float, float]:
        """Omitted weight as (estimate, absolute error)."""
        n = self.size
        if self.kind == "geometric":
            t = self.ratio ** (n + 1) / (1.0 - self.ratio)
            return t, 4 * closed_forms.EPS * t
        if self.kind == "power-law":
            t = float(zeta(self.weight_exponent, n + 1))
            return t, 1e-13 * t
        if self.kind == "counterexample":
            return closed_forms.tail_weight(n)
        return 0.0, 0.0

    def tail_radius(self) -> float:
        """Every omitted charge lies in the closed disc |z - 1| <= rho."""
        n = self.size
        if self.kind == "geometric":
            return self.ratio ** (n + 1)
        if self.kind == "power-law":
            return (n + 1.0) ** -self.exponent
        if self.kind == "counterexample":
            return 1.0 / ((2 * n + 3) * math.pi)
        return 0.0

    # -- analytic metadata ---------------------------------------------------

    @property
    def declared_lambda(self) -> float | None:
        if self.kind == "geometric":
            return 0.0
        if self.kind == "power-law":
            return 1.0 / self.exponent
        if self.kind == "counterexample":
            return 1.0
        return self.lam

    @property
    def limit_angle(self) -> float:
        """lim |arg(1 - z_k)| along the family (0 when unknown or finite)."""
        if self.kind == "power-law":
            return abs(self.angle)
        if self.kind == "counterexample":
            return math.pi / 2
        return 0.0

    @property
    def accumulates_at_one(self) -> bool:
        return self.kind != "explicit" or self.accumulates

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.kind == "geometric":
            d.update(ratio=self.ratio, count=self.size)
        elif self.kind == "power-law":
            d.update(exponent=self.exponent, angle=self.angle,
                     weight_exponent=self.weight_exponent, count=self.size)
        elif self.kind == "counterexample":
            d.update(half_width=self.size)
        else:
            d.update(**{"lambda": "unknown" if self.lam is None else self.lam},
                     accumulates=self.accumulates)
        return d


def geometric(ratio: float = 0.5, count: int = 40) -> FamilyGenerator:
    return FamilyGenerator("geometric", size=count, ratio=ratio)


def power_law(exponent: float, count: int, angle: float = 0.0,
              weight_exponent: float = 2.0) -> FamilyGenerator:
    return FamilyGenerator("power-law", size=count, exponent=exponent, angle=angle,
                           weight_exponent=weight_exponent)


def counterexample(half_width: int) -> FamilyGenerator:
    return FamilyGenerator("counterexample", size=half_width)
