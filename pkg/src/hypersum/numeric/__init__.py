"""Numeric layer: explicit-precision floats, gamma, series and acceleration."""
from .accel import accelerate
from .bigfloat import GUARD_BITS, BigFloat, NumericValue, bf_pi, bf_sqrt2, ev_to_numeric
from .gamma import num_gamma
from .series import (
    ConvergenceClass,
    SeriesSpec,
    convergence_class,
    partial_sums,
    pfq_eval,
    pfq_exact_sum,
)

__all__ = [
    "BigFloat",
    "NumericValue",
    "GUARD_BITS",
    "bf_pi",
    "bf_sqrt2",
    "ev_to_numeric",
    "num_gamma",
    "accelerate",
    "SeriesSpec",
    "ConvergenceClass",
    "convergence_class",
    "partial_sums",
    "pfq_eval",
    "pfq_exact_sum",
]
