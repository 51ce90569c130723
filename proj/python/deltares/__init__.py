"""Resonances of -h^2 d^2/dx^2 + h^(2-alpha) delta_1 on the half line."""

from ._core import (
    ModelParams,
    Resonance,
    BranchValue,
    TailCheck,
    stirling_cycle,
    series_coefficient,
    w_series,
    w_halley,
    remainder_tail_check,
    residual,
    branch_range,
    resonance_from_branch,
    newton_refine,
    annulus_resonances,
    scan_resonances,
    width_small_alpha,
    width_big_alpha,
    reflection_coefficient,
    certify_bounds,
    contour_scan,
)

__all__ = [
    "ModelParams",
    "Resonance",
    "BranchValue",
    "TailCheck",
    "stirling_cycle",
    "series_coefficient",
    "w_series",
    "w_halley",
    "remainder_tail_check",
    "residual",
    "branch_range",
    "resonance_from_branch",
    "newton_refine",
    "annulus_resonances",
    "scan_resonances",
    "width_small_alpha",
    "width_big_alpha",
    "reflection_coefficient",
    "certify_bounds",
    "contour_scan",
]
