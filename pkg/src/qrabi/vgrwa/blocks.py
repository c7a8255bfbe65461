"""
Excitation-conserving blocks of the displaced-frame GRWA Hamiltonian.

Manifold n >= 1 is spanned by (|1_x, n-1>, |0_x, n>, |-1_x, n+1>) and solved
by the trigonometric cubic formula; manifold 0 is the 2x2 block on
(|0_x, 0>, |-1_x, 1>); |-1_x, 0> is decoupled and is the trial ground state.
"""

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from qrabi.exceptions import CubicDegeneracyError, DomainError
from qrabi.logging import logger
from qrabi.model import ModelParams
from qrabi.special import fcoeff_table

from .cubic import solve_cubic
from .displacement import Displacement, ground_energy

# sign of f^0_{n+1} on the |-1_x, n+1> diagonal entry (J_x eigenvalue -1)
NU_PLUS_SIGN = -1.0
# accepted ||M c - E c||_inf of the cubic eigenvectors, relative to max(1, max|M|)
RESIDUAL_TOL = 1e-11
ORTHONORMALITY_TOL = 1e-10


def _positive_pivot(vectors: np.ndarray) -> np.ndarray:
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def pair_eigensystem(a: float, b: float, r: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Closed-form eigenpairs of [[a, r], [r, b]].

    Vectors take the half-angle form
    (+-sqrt((1 +- delta)/2), sign(r) sqrt((1 -+ delta)/2)) with
    delta = (a - b)/sqrt((a - b)^2 + 4 r^2).

    Returns:
        Tuple[np.ndarray, np.ndarray]: Ascending values (E-, E+) and column vectors.
    """
    root = math.hypot(a - b, 2.0 * r)
    mean = 0.5 * (a + b)
    if root == 0.0:
        return np.array([a, b]), np.eye(2)
    delta = (a - b) / root
    sign = -1.0 if r < 0 else 1.0
    low = np.array([-math.sqrt(0.5 * (1.0 - delta)), sign * math.sqrt(0.5 * (1.0 + delta))])
    high = np.array([math.sqrt(0.5 * (1.0 + delta)), sign * math.sqrt(0.5 * (1.0 - delta))])
    return np.array([mean - 0.5 * root, mean + 0.5 * root]), np.column_stack([low, high])


@dataclass(frozen=True)
class GrwaBlock:
    """
    Manifold n >= 1 of the GRWA Hamiltonian.

    Attributes:
        n (int): Manifold index.
        nu_minus (float): omega (n-1) + f^0_{n-1} + eps_lambda.
        nu_zero (float): omega n + 2 eps_lambda.
        nu_plus (float): omega (n+1) - f^0_{n+1} + eps_lambda.
        z (float): sqrt(n/2) (f^1_{n-1} + lambda').
        y (float): sqrt((n+1)/2) (f^1_n + lambda').
        values (np.ndarray): Ascending E_n^j.
        vectors (np.ndarray): Columns (c_1, c_0, c_-1) for each j.
        theta (float): Trigonometric angle, NaN when the numeric fallback was used.
        solver (str): "cubic" or "numeric".
    """

    n: int
    nu_minus: float
    nu_zero: float
    nu_plus: float
    z: float
    y: float
    values: np.ndarray
    vectors: np.ndarray
    theta: float
    solver: str

    @property
    def matrix(self) -> np.ndarray:
        return np.array(
            [
                [self.nu_minus, self.z, 0.0],
                [self.z, self.nu_zero, self.y],
                [0.0, self.y, self.nu_plus],
            ]
        )

    @property
    def cubic_coefficients(self) -> Tuple[float, float, float]:
        """(b, c, d) of det(M - E) = -(E^3 + b E^2 + c E + d)."""
        return _cubic_coefficients(self.nu_minus, self.nu_zero, self.nu_plus, self.z, self.y)

    def coefficients(self, j: int) -> Tuple[float, float, float]:
        """(c_1, c_0, c_-1) of the j-th level, j = 0, 1, 2 ascending."""
        column = self.vectors[:, j]
        return float(column[0]), float(column[1]), float(column[2])

    def residual(self) -> float:
        return float(np.max(np.abs(self.matrix @ self.vectors - self.vectors * self.values)))


@dataclass(frozen=True)
class Block0:
    """
    Manifold 0 on (|0_x, 0>, |-1_x, 1>).

    Attributes:
        eps00 (float): 2 eps_lambda.
        eps1m (float): omega - f^0_1 + eps_lambda.
        r01 (float): sqrt(1/2) (f^1_0 + lambda').
        values (np.ndarray): (E_0^-, E_0^+).
        vectors (np.ndarray): Columns (c_{0,0}, c_{-1,0}).
    """

    eps00: float
    eps1m: float
    r01: float
    values: np.ndarray
    vectors: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.eps00, self.r01], [self.r01, self.eps1m]])

    def coefficients(self, j: int) -> Tuple[float, float]:
        column = self.vectors[:, j]
        return float(column[0]), float(column[1])


@dataclass(frozen=True)
class GroundState:
    """|-1_x> x |0> in the displaced frame, energy E_G(lambda)."""

    energy: float
    lam: float


def _cubic_coefficients(nu_minus: float, nu_zero: float, nu_plus: float, z: float, y: float):
    b = -(nu_minus + nu_zero + nu_plus)
    c = nu_minus * nu_zero + nu_plus * (nu_minus + nu_zero) - z * z - y * y
    d = -nu_minus * nu_zero * nu_plus + z * z * nu_plus + y * y * nu_minus
    return b, c, d


def _cubic_eigenpairs(nu_minus, nu_zero, nu_plus, z, y) -> Tuple[np.ndarray, np.ndarray, float]:
    # shift to a traceless block so b vanishes and the roots keep full precision
    shift = (nu_minus + nu_zero + nu_plus) / 3.0
    lo, mid, hi = nu_minus - shift, nu_zero - shift, nu_plus - shift
    b, c, d = _cubic_coefficients(lo, mid, hi, z, y)
    roots = np.array(solve_cubic(b, c, d))
    p = b * b - 3.0 * c
    argument = (2.0 * b**3 - 9.0 * b * c + 27.0 * d) / (2.0 * p**1.5)
    theta = math.acos(min(1.0, max(-1.0, argument))) / 3.0

    columns = np.vstack([z * (roots - hi), (roots - hi) * (roots - lo), y * (roots - lo)])
    with np.errstate(invalid="ignore", divide="ignore"):
        vectors = columns / np.linalg.norm(columns, axis=0)
    return roots + shift, vectors, theta


def _acceptable(matrix: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> bool:
    if not np.all(np.isfinite(vectors)):
        return False
    scale = max(1.0, float(np.max(np.abs(matrix))))
    residual = np.max(np.abs(matrix @ vectors - vectors * values))
    orthonormality = np.max(np.abs(vectors.T @ vectors - np.eye(3)))
    return residual <= RESIDUAL_TOL * scale and orthonormality <= ORTHONORMALITY_TOL


def _block_from(n: int, nu_minus, nu_zero, nu_plus, z, y) -> GrwaBlock:
    matrix = np.array([[nu_minus, z, 0.0], [z, nu_zero, y], [0.0, y, nu_plus]])
    solver = "cubic"
    try:
        values, vectors, theta = _cubic_eigenpairs(nu_minus, nu_zero, nu_plus, z, y)
        if not _acceptable(matrix, values, vectors):
            logger.debug(f"Block n={n}: cubic eigenvectors rejected, using the numeric eigensolver")
            solver = "numeric"
    except CubicDegeneracyError as e:
        logger.warning(f"Block n={n}: {e}; using the numeric eigensolver")
        solver = "numeric"
    if solver == "numeric":
        values, vectors = np.linalg.eigh(matrix)
        theta = math.nan

    vectors = _positive_pivot(vectors)
    values = np.asarray(values, dtype=float)
    values.setflags(write=False)
    vectors.setflags(write=False)
    return GrwaBlock(
        n=n,
        nu_minus=nu_minus,
        nu_zero=nu_zero,
        nu_plus=nu_plus,
        z=z,
        y=y,
        values=values,
        vectors=vectors,
        theta=theta,
        solver=solver,
    )


def grwa_blocks(params: ModelParams, disp: Displacement, n_blocks: int) -> List[GrwaBlock]:
    """
    Manifolds n = 1..n_blocks sharing one pass over the F_0, F_1 tables.

    Args:
        params (ModelParams): Model parameters.
        disp (Displacement): Displacement and derived couplings.
        n_blocks (int): Highest manifold index.

    Returns:
        List[GrwaBlock]: Blocks ordered by n.
    """
    if n_blocks < 0:
        raise DomainError(f"block count must be nonnegative, got {n_blocks}")
    if n_blocks == 0:
        return []
    f0 = params.Omega * fcoeff_table(disp.lam, 0, n_blocks + 1)
    f1 = params.Omega * fcoeff_table(disp.lam, 1, n_blocks)
    omega, eps, lam_prime = params.omega, disp.eps_lambda, disp.lambda_prime

    blocks = []
    for n in range(1, n_blocks + 1):
        blocks.append(
            _block_from(
                n,
                nu_minus=omega * (n - 1) + f0[n - 1] + eps,
                nu_zero=omega * n + 2.0 * eps,
                nu_plus=omega * (n + 1) + NU_PLUS_SIGN * f0[n + 1] + eps,
                z=math.sqrt(n / 2.0) * (f1[n - 1] + lam_prime),
                y=math.sqrt((n + 1) / 2.0) * (f1[n] + lam_prime),
            )
        )
    return blocks


def grwa_block(params: ModelParams, disp: Displacement, n: int) -> GrwaBlock:
    """Single manifold n >= 1."""
    if n < 1:
        raise DomainError(f"GRWA block index must be >= 1, got {n}")
    return grwa_blocks(params, disp, n)[-1]


def grwa_block0(params: ModelParams, disp: Displacement) -> Block0:
    """Manifold 0 with its closed-form eigenpairs."""
    f0 = params.Omega * fcoeff_table(disp.lam, 0, 1)
    f1 = params.Omega * fcoeff_table(disp.lam, 1, 0)
    eps00 = 2.0 * disp.eps_lambda
    eps1m = params.omega - f0[1] + disp.eps_lambda
    r01 = math.sqrt(0.5) * (f1[0] + disp.lambda_prime)
    values, vectors = pair_eigensystem(eps00, eps1m, r01)
    values.setflags(write=False)
    vectors.setflags(write=False)
    return Block0(eps00=eps00, eps1m=eps1m, r01=r01, values=values, vectors=vectors)


def ground_state(params: ModelParams, disp: Displacement) -> GroundState:
    return GroundState(energy=ground_energy(params, disp), lam=disp.lam)
