"""Zeros of logarithmic potential fields f(z) = Σ a_k/(z - z_k) accumulating at z = 1."""

from .contour_zeros import (
    ContourSpec,
    WindingResult,
    ZeroRecord,
    convex_hull_containment,
    count_zeros,
    gauss_lucas_witness,
    isolate_zeros,
    refine_zero,
    winding_number,
    zero_sequence_toward_boundary,
)
from .counterexample import (
    CounterexampleModel,
    build_model,
    certify_L,
    certify_zero_free,
    eval_g,
    eval_h,
    residue_identity,
)
from .errors import *  # noqa: F401,F403
from .families import FamilyGenerator, geometric, power_law
from .families import counterexample as counterexample_family
from .hypotheses import (
    HypothesisReport,
    SectorProbe,
    check_hypotheses,
    exponent_of_convergence,
    negative_axis_probe,
    sector_probe,
    stolz_angle_sup,
    threshold_C,
    threshold_C2,
)
from .potential_core import (
    DISC,
    HALF_PLANE,
    ChargeConfiguration,
    PointCharge,
    TailBoundedValue,
    eval_f,
    eval_F,
    eval_f_prime,
    eval_F_prime,
    eval_potential_u,
    to_disc,
    to_halfplane,
)

__version__ = "0.1.0"
