"""Semistability of pairs via weight polytopes.

Thin wrapper over the C++ core; all exact values travel as JSON strings or
rational strings ("p/q").
"""

from polystab._core import (  # noqa: F401
    SchemaError,
    binary_enumerate,
    binary_pair,
    closed_form_check,
    curve_check,
    degrees_and_mu,
    distance_identity_residual,
    energy,
    exact_slope,
    hm_check,
    hull,
    hyperdiscriminant,
    pair_check,
    quotient_project,
    slope,
    x_resultant,
)

__all__ = [
    "SchemaError",
    "binary_enumerate",
    "binary_pair",
    "closed_form_check",
    "curve_check",
    "degrees_and_mu",
    "distance_identity_residual",
    "energy",
    "exact_slope",
    "hm_check",
    "hull",
    "hyperdiscriminant",
    "pair_check",
    "quotient_project",
    "slope",
    "x_resultant",
]
