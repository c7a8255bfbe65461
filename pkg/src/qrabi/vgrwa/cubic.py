"""Real roots of a monic cubic with three real roots, by the trigonometric method."""

import math
from typing import Tuple

from qrabi.exceptions import CubicDegeneracyError
from qrabi.logging import logger

# |arccos argument| - 1 accepted and clamped
CLAMP_WINDOW = 1e-9
# b^2 - 3c below which the three roots coincide
TRIPLE_ROOT_TOL = 1e-30
NEWTON_STEPS = 2


def _cubic(root: float, b: float, c: float, d: float) -> float:
    return ((root + b) * root + c) * root + d


def _polish(root: float, b: float, c: float, d: float) -> float:
    """Newton steps, each kept only if it lowers |cubic(root)| (near double roots the slope vanishes)."""
    value = _cubic(root, b, c, d)
    for _ in range(NEWTON_STEPS):
        slope = (3.0 * root + 2.0 * b) * root + c
        if slope == 0.0 or value == 0.0:
            break
        candidate = root - value / slope
        candidate_value = _cubic(candidate, b, c, d) if math.isfinite(candidate) else math.inf
        if abs(candidate_value) >= abs(value):
            break
        root, value = candidate, candidate_value
    return root


def solve_cubic(b: float, c: float, d: float) -> Tuple[float, float, float]:
    """
    Roots of E^3 + b E^2 + c E + d = 0, ascending.

    With p = b^2 - 3c and theta = arccos[(2b^3 - 9bc + 27d) / (2 p^(3/2))] / 3
    the roots are (-b - 2 sqrt(p) cos theta)/3 and
    (-b + sqrt(p)(cos theta +- sqrt(3) sin theta))/3. Each root is refined by
    two Newton steps on the cubic.

    Args:
        b (float): Quadratic coefficient.
        c (float): Linear coefficient.
        d (float): Constant coefficient.

    Returns:
        Tuple[float, float, float]: Ascending roots.

    Raises:
        CubicDegeneracyError: If p is (numerically) zero or the arccos argument
            leaves [-1, 1] by more than the clamp window.
    """
    p = b * b - 3.0 * c
    if p < TRIPLE_ROOT_TOL:
        raise CubicDegeneracyError(f"b^2 - 3c = {p:.3e}: (near) triple root")

    argument = (2.0 * b**3 - 9.0 * b * c + 27.0 * d) / (2.0 * p**1.5)
    if abs(argument) > 1.0:
        if abs(argument) - 1.0 > CLAMP_WINDOW:
            raise CubicDegeneracyError(f"arccos argument {argument!r} outside [-1, 1]")
        logger.warning(f"Clamping cubic arccos argument {argument!r} to [-1, 1]")
        argument = math.copysign(1.0, argument)

    theta = math.acos(argument) / 3.0
    sqrt_p = math.sqrt(p)
    roots = (
        (-b - 2.0 * sqrt_p * math.cos(theta)) / 3.0,
        (-b + sqrt_p * (math.cos(theta) + math.sqrt(3.0) * math.sin(theta))) / 3.0,
        (-b + sqrt_p * (math.cos(theta) - math.sqrt(3.0) * math.sin(theta))) / 3.0,
    )
    polished = sorted(_polish(root, b, c, d) for root in roots)
    return polished[0], polished[1], polished[2]
