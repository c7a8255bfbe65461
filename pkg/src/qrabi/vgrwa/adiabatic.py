"""
Adiabatic approximation: spin and oscillator decoupled in the displaced frame.

Each Fock level n carries a 3x3 block on (|-1_x, n>, |0_x, n>, |1_x, n>)
whose middle state decouples and whose outer pair is mixed by eps_lambda.
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.optimize import minimize_scalar

from qrabi.exceptions import DomainError
from qrabi.logging import logger
from qrabi.model import ModelParams
from qrabi.special import fcoeff_table

from .blocks import pair_eigensystem
from .displacement import Displacement, LambdaStrategy


@dataclass(frozen=True)
class AdiabaticBlock:
    """
    Block of Fock level n.

    Attributes:
        n (int): Fock index.
        xi_minus (float): omega n + eps_lambda - Omega F_0(n).
        xi_zero (float): omega n + 2 eps_lambda.
        xi_plus (float): omega n + eps_lambda + Omega F_0(n).
        eps_lambda (float): Coupling between the |-1_x> and |1_x> states.
        values (np.ndarray): Ascending eigenvalues.
        vectors (np.ndarray): Column eigenvectors on (|-1_x, n>, |0_x, n>, |1_x, n>).
        branches (tuple): "-", "0", "+" label of each column.
    """

    n: int
    xi_minus: float
    xi_zero: float
    xi_plus: float
    eps_lambda: float
    values: np.ndarray
    vectors: np.ndarray
    branches: tuple

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.xi_minus, 0.0, self.eps_lambda],
                [0.0, self.xi_zero, 0.0],
                [self.eps_lambda, 0.0, self.xi_plus],
            ]
        )

    def energy(self, branch: str) -> float:
        return float(self.values[self.branches.index(branch)])


def _block(n: int, omega: float, f0: float, eps: float) -> AdiabaticBlock:
    xi_minus = omega * n + eps - f0
    xi_zero = omega * n + 2.0 * eps
    xi_plus = omega * n + eps + f0
    pair_values, pair_vectors = pair_eigensystem(xi_minus, xi_plus, eps)

    entries = [
        (pair_values[0], "-", np.array([pair_vectors[0, 0], 0.0, pair_vectors[1, 0]])),
        (xi_zero, "0", np.array([0.0, 1.0, 0.0])),
        (pair_values[1], "+", np.array([pair_vectors[0, 1], 0.0, pair_vectors[1, 1]])),
    ]
    entries.sort(key=lambda entry: entry[0])
    values = np.array([entry[0] for entry in entries])
    vectors = np.column_stack([entry[2] for entry in entries])
    values.setflags(write=False)
    vectors.setflags(write=False)
    return AdiabaticBlock(
        n=n,
        xi_minus=xi_minus,
        xi_zero=xi_zero,
        xi_plus=xi_plus,
        eps_lambda=eps,
        values=values,
        vectors=vectors,
        branches=tuple(entry[1] for entry in entries),
    )


def adiabatic_blocks(params: ModelParams, disp: Displacement, n_max: int) -> List[AdiabaticBlock]:
    """Blocks for n = 0..n_max."""
    if n_max < 0:
        raise DomainError(f"Fock index must be nonnegative, got {n_max}")
    f0 = params.Omega * fcoeff_table(disp.lam, 0, n_max)
    return [_block(n, params.omega, f0[n], disp.eps_lambda) for n in range(n_max + 1)]


def adiabatic_block(params: ModelParams, disp: Displacement, n: int) -> AdiabaticBlock:
    return adiabatic_blocks(params, disp, n)[-1]


def adiabatic_ground_energy(params: ModelParams, lam: float) -> float:
    """Lower outer eigenvalue of block 0: eps_lambda - sqrt(Omega^2 exp(-lambda^2) + eps_lambda^2)."""
    eps = 0.5 * (lam * lam * params.omega - 2.0 * params.g * lam)
    f0 = params.Omega * math.exp(-0.5 * lam * lam)
    return eps - math.hypot(f0, eps)


def solve_lambda_adiabatic(params: ModelParams) -> Displacement:
    """
    Minimize the adiabatic ground level over lambda in [0, g/omega].

    No closed form exists for the stationary point, so a bounded scalar
    minimization is used and compared with both interval ends.
    """
    upper = params.g / params.omega
    if upper == 0.0:
        return Displacement.from_lambda(params, 0.0, LambdaStrategy.ADIABATIC_OPTIMAL)

    result = minimize_scalar(
        lambda lam: adiabatic_ground_energy(params, lam),
        bounds=(0.0, upper),
        method="bounded",
        options={"xatol": 1e-12},
    )
    candidates = [float(result.x), 0.0, upper]
    lam = min(candidates, key=lambda value: adiabatic_ground_energy(params, value))
    logger.debug(f"Adiabatic lambda for {params}: {lam} ({result.nfev} evaluations)")
    return Displacement.from_lambda(params, lam, LambdaStrategy.ADIABATIC_OPTIMAL)
