"""Power-law fitting and skeleton-based estimation of search information."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateFitError, NetskelError

# Rule of thumb: the skeleton estimate is only reliable when the skeleton
# keeps at least this fraction of the original nodes.
RELIABLE_RATIO = 0.3


@dataclass(frozen=True)
class PowerLawFit:
    amplitude: float
    exponent: float
    r_squared: float


@dataclass(frozen=True)
class ScalingConstants:
    """Published scaling constants; override any of them with a re-fitted value."""

    skeleton_amplitude: float = 0.988
    skeleton_exponent: float = 2.355
    inverse_amplitude: float = 1.012
    inverse_exponent: float = 2.35
    tree_amplitude: float = 0.721
    tree_exponent: float = 2.550

    def __post_init__(self) -> None:
        for name in ("skeleton_amplitude", "inverse_amplitude", "tree_amplitude"):
            if getattr(self, name) <= 0:
                raise NetskelError(f"{name} must be positive")


@dataclass(frozen=True)
class SkeletonEstimate:
    h_skeleton: float
    ratio: float
    estimate_bits: float
    low_confidence: bool


def fit_power_law(points: Sequence[tuple[float, float]]) -> PowerLawFit:
    """OLS on (ln x, ln y): y = amplitude * x^exponent, r^2 in log space."""
    if len(points) < 3:
        raise DegenerateFitError(f"need at least 3 points, got {len(points)}")
    for x, y in points:
        if x <= 0 or y <= 0:
            raise NetskelError(f"power-law fit requires positive values, got ({x}, {y})")
    lx = np.log([x for x, _ in points])
    ly = np.log([y for _, y in points])
    if np.allclose(lx, lx[0]):
        raise DegenerateFitError("all x values are equal; slope is undetermined")
    slope, intercept = np.polyfit(lx, ly, 1)
    residuals = ly - (slope * lx + intercept)
    ss_res = float(np.dot(residuals, residuals))
    ss_tot = float(np.dot(ly - ly.mean(), ly - ly.mean()))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res < 1e-18 else 0.0
    else:
        r2 = max(0.0, 1.0 - ss_res / ss_tot)
    return PowerLawFit(
        amplitude=float(math.exp(intercept)),
        exponent=float(slope),
        r_squared=r2,
    )


def estimate_h_from_skeleton(
    h_skeleton: float,
    n_skeleton: int,
    n_original: int,
    c: ScalingConstants = ScalingConstants(),
) -> float:
    """Approximate the original network's search information from its skeleton:
    inverse_amplitude * (n_skeleton / n_original)^(-inverse_exponent) * h_skeleton.
    """
    if n_skeleton <= 0:
        raise NetskelError(f"n_skeleton must be positive, got {n_skeleton}")
    if n_skeleton > n_original:
        raise NetskelError(
            f"skeleton ({n_skeleton} nodes) cannot exceed the original ({n_original})"
        )
    if h_skeleton < 0:
        raise NetskelError(f"h_skeleton must be non-negative, got {h_skeleton}")
    ratio = n_skeleton / n_original
    return c.inverse_amplitude * ratio ** (-c.inverse_exponent) * h_skeleton


def skeleton_estimate(
    h_skeleton: float,
    n_skeleton: int,
    n_original: int,
    c: ScalingConstants = ScalingConstants(),
) -> SkeletonEstimate:
    """estimate_h_from_skeleton plus the low-confidence flag for small skeletons."""
    bits = estimate_h_from_skeleton(h_skeleton, n_skeleton, n_original, c)
    ratio = n_skeleton / n_original
    return SkeletonEstimate(
        h_skeleton=h_skeleton,
        ratio=ratio,
        estimate_bits=bits,
        low_confidence=ratio < RELIABLE_RATIO,
    )


def approx_h_tree(n: int, c: ScalingConstants = ScalingConstants()) -> float:
    """Average-tree scaling: tree_amplitude * n^tree_exponent."""
    if n < 1:
        raise NetskelError(f"n must be positive, got {n}")
    return c.tree_amplitude * n ** c.tree_exponent


def relative_error(estimate: float, actual: float) -> float:
    """(estimate - actual) / actual, signed."""
    if actual <= 0:
        raise NetskelError(f"actual must be positive, got {actual}")
    return (estimate - actual) / actual
