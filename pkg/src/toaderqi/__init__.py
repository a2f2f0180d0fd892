"""Toader-Qi mean, the modified Bessel function I0 and their sharp bounds.

Modules: `special` (I0 and exact series tables), `means` (bivariate means),
`sequences` (Wallis-type sequences), `sharp` (ratio functions and sharp
constants), `registry` (inequality table and sampling verifier), `cli`.
"""
from .errors import (ConsistencyError, DomainError, NoSharpnessData, NonConvergence,
                     UnknownCase, UnknownSequence, UnsupportedKind)
from .means import MeanKind, PositivePair, evaluate, hyperbolic_form, p_order, tq_mean
from .registry import sharpness_probe, verify_case
from .sharp import find_lambda0, find_t0_delta0, monotonicity_scan, ratio_eval
from .special import (CoeffKind, CoeffTable, i0, i0_quadrature, i0_scaled, i0_series,
                      power_series_ratio)

__version__ = "0.1.0"

__all__ = [
    "CoeffKind", "CoeffTable", "ConsistencyError", "DomainError", "MeanKind", "NoSharpnessData",
    "NonConvergence", "PositivePair", "UnknownCase", "UnknownSequence", "UnsupportedKind",
    "evaluate", "find_lambda0", "find_t0_delta0", "hyperbolic_form", "i0", "i0_quadrature",
    "i0_scaled", "i0_series", "monotonicity_scan", "p_order", "power_series_ratio", "ratio_eval",
    "sharpness_probe", "tq_mean", "verify_case",
]
