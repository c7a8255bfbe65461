"""
Variational choice of the displacement lambda.

The trial ground state |-1_x> x |0> of the displaced frame has energy
E_G(lambda) = (lambda^2 omega - 2 g lambda)/2 - Omega exp(-lambda^2/2).
Its stationary point g - lambda omega - lambda Omega exp(-lambda^2/2) = 0
fixes the variational displacement; the other strategies are the closed-form
and fixed-point approximations of that root, plus the plain GRWA value g/omega.
"""

import math
from dataclasses import dataclass
from qrabi._compat import StrEnum

import numpy as np
from scipy.optimize import bisect

from qrabi.exceptions import DomainError
from qrabi.logging import logger
from qrabi.model import ModelParams, displacement_energy
from qrabi.special import laguerre_assoc, laguerre_sequence

# points of the sign-change scan over [0, g/omega]
ROOT_SCAN_POINTS = 257
ROOT_XTOL = 1e-14


class LambdaStrategy(StrEnum):
    GRWA_FIXED = "grwa"
    CLOSED_FORM = "closed-form"
    SELF_CONSISTENT = "self-consistent"
    EXACT_ROOT = "exact-root"
    ADIABATIC_OPTIMAL = "adiabatic-optimal"


@dataclass(frozen=True)
class Displacement:
    """
    Displacement lambda together with the derived couplings.

    Attributes:
        lam (float): lambda, 0 <= lambda <= g/omega.
        lambda_prime (float): Residual linear coupling g - lambda omega.
        eps_lambda (float): Displacement energy (lambda^2 omega - 2 g lambda)/2.
        strategy (LambdaStrategy): How lambda was chosen.
    """

    lam: float
    lambda_prime: float
    eps_lambda: float
    strategy: LambdaStrategy

    @classmethod
    def from_lambda(cls, params: ModelParams, lam: float, strategy: LambdaStrategy) -> "Displacement":
        lam = float(lam)
        upper = params.g / params.omega
        if lam < 0 or lam > upper * (1.0 + 1e-12) + 1e-300:
            raise DomainError(f"lambda={lam} outside [0, g/omega={upper}]")
        return cls(
            lam=lam,
            lambda_prime=params.g - lam * params.omega,
            eps_lambda=displacement_energy(params, lam),
            strategy=LambdaStrategy(strategy),
        )


def energy_function(params: ModelParams, lam: float) -> float:
    """E_G(lambda) of the trial ground state."""
    return displacement_energy(params, lam) - params.Omega * math.exp(-0.5 * lam * lam)


def ground_energy(params: ModelParams, disp: Displacement) -> float:
    return energy_function(params, disp.lam)


def stationarity_residual(params: ModelParams, lam: float) -> float:
    """g - lambda omega - lambda Omega exp(-lambda^2/2), zero at a stationary E_G."""
    return params.g - lam * params.omega - lam * params.Omega * math.exp(-0.5 * lam * lam)


def closed_form_lambda(params: ModelParams) -> float:
    return params.g / (params.omega + params.Omega)


def self_consistent_lambda(params: ModelParams) -> float:
    """One fixed-point step g / (omega + Omega exp(-lambda_0^2/2)) from the closed form."""
    lam0 = closed_form_lambda(params)
    return params.g / (params.omega + params.Omega * math.exp(-0.5 * lam0 * lam0))


def exact_root_lambda(params: ModelParams) -> float:
    """
    Root of the stationarity condition on [0, g/omega] with the lowest E_G.

    The residual is g > 0 at lambda = 0 and negative at g/omega whenever
    Omega > 0. Every sign change on a uniform scan is refined by bisection so
    that multiple stationary points are all considered.
    """
    if params.g == 0.0:
        return 0.0
    upper = params.g / params.omega
    if params.Omega == 0.0:
        return upper

    grid = np.linspace(0.0, upper, ROOT_SCAN_POINTS)
    residuals = np.array([stationarity_residual(params, lam) for lam in grid])
    roots = [float(grid[i]) for i in np.flatnonzero(residuals == 0.0)]
    for i in np.flatnonzero(residuals[:-1] * residuals[1:] < 0.0):
        roots.append(bisect(lambda lam: stationarity_residual(params, lam), grid[i], grid[i + 1], xtol=ROOT_XTOL))

    if len(roots) > 1:
        logger.debug(f"Stationarity condition has {len(roots)} roots for {params}: {roots}")
    return min(roots, key=lambda lam: energy_function(params, lam))


def solve_lambda(params: ModelParams, strategy: LambdaStrategy = LambdaStrategy.CLOSED_FORM) -> Displacement:
    """
    Choose lambda for the displaced-frame approximation.

    Args:
        params (ModelParams): Model parameters.
        strategy (LambdaStrategy): Selection rule.

    Returns:
        Displacement: lambda with its derived couplings.
    """
    strategy = LambdaStrategy(strategy)
    if strategy is LambdaStrategy.GRWA_FIXED:
        lam = params.g / params.omega
    elif strategy is LambdaStrategy.CLOSED_FORM:
        lam = closed_form_lambda(params)
    elif strategy is LambdaStrategy.SELF_CONSISTENT:
        lam = self_consistent_lambda(params)
    elif strategy is LambdaStrategy.EXACT_ROOT:
        lam = exact_root_lambda(params)
    else:
        from .adiabatic import solve_lambda_adiabatic

        return solve_lambda_adiabatic(params)
    return Displacement.from_lambda(params, lam, strategy)


def counter_rotating_coeff(params: ModelParams, disp: Displacement, n: int) -> float:
    """g - lambda omega - Omega exp(-lambda^2/2) lambda L_n^1(lambda^2)/(n + 1)."""
    if n < 0:
        raise DomainError(f"Fock index must be nonnegative, got {n}")
    lam = disp.lam
    laguerre = laguerre_assoc(n, 1, lam * lam)
    return disp.lambda_prime - params.Omega * math.exp(-0.5 * lam * lam) * lam * laguerre / (n + 1)


def counter_rotating_profile(params: ModelParams, disp: Displacement, n_max: int) -> np.ndarray:
    """counter_rotating_coeff for n = 0..n_max in one recurrence pass."""
    lam = disp.lam
    laguerre = laguerre_sequence(n_max, 1, lam * lam)
    orders = np.arange(1, n_max + 2, dtype=float)
    return disp.lambda_prime - params.Omega * math.exp(-0.5 * lam * lam) * lam * laguerre / orders
