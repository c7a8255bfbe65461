"""
Analytical time evolution in the displaced frame.

The initial state is expanded over the GRWA eigenstates, each component is
advanced by its phase exp(-i E t), and the amplitudes are recombined on the
|j_x, n> basis. J_z is unchanged by the displacement, so <J_z>(t) and the
|-1_z> population follow from bilinear forms in those amplitudes.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from qrabi.config import settings
from qrabi.exceptions import DomainError
from qrabi.logging import logger
from qrabi.model import ModelParams
from qrabi.vgrwa import Displacement, ground_state, grwa_block0, grwa_blocks, method_tag

from .coeffs import DynamicsCoeffs, initial_coeffs
from .coherent import minimal_cutoff
from .series import InitialState, TimeGrid, TimeSeries

ROOT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ManifoldSet:
    """
    Eigen-data of the ground state and manifolds 0..cutoff.

    Attributes:
        ground_energy (float): E_G.
        block0_values (np.ndarray): (E_0^1, E_0^2).
        block0_vectors (np.ndarray): Columns (c_{0,0}^j, c_{-1,0}^j).
        values (np.ndarray): Shape (cutoff, 3), E_n^j for n = 1..cutoff.
        vectors (np.ndarray): Shape (cutoff, 3, 3), [n-1, m, j] = c_{m,n}^j with m in (1, 0, -1).
    """

    ground_energy: float
    block0_values: np.ndarray
    block0_vectors: np.ndarray
    values: np.ndarray
    vectors: np.ndarray

    @property
    def cutoff(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class BetaTrajectory:
    """
    Evolved amplitudes on the |j_x, n> basis.

    Attributes:
        grid (TimeGrid): Sample times.
        beta0 (np.ndarray): Shape (T,), amplitude on |-1_x, 0>.
        beta_block0 (np.ndarray): Shape (T, 2), (beta_{0,0}, beta_{-1,0}).
        beta (np.ndarray): Shape (T, cutoff, 3), (beta_{1,n}, beta_{0,n}, beta_{-1,n}).
        d0 (float): Overlap with the ground state.
        d_block0 (np.ndarray): D_0^j.
        d (np.ndarray): Shape (cutoff, 3), D_n^j.
    """

    grid: TimeGrid
    beta0: np.ndarray
    beta_block0: np.ndarray
    beta: np.ndarray
    d0: float
    d_block0: np.ndarray
    d: np.ndarray

    @property
    def norm(self) -> np.ndarray:
        return (
            np.abs(self.beta0) ** 2
            + np.sum(np.abs(self.beta_block0) ** 2, axis=1)
            + np.sum(np.abs(self.beta) ** 2, axis=(1, 2))
        )

    @property
    def overlap_weight(self) -> float:
        """|D_0|^2 + sum |D_0^j|^2 + sum |D_n^j|^2."""
        return float(self.d0**2 + np.sum(self.d_block0**2) + np.sum(self.d**2))

    def fock_amplitudes(self):
        """
        Amplitudes regrouped by Fock level k = 0..cutoff+1.

        Returns:
            tuple: (up, mid, low) of shape (T, cutoff + 2) on |1_x, k>, |0_x, k>, |-1_x, k>.
            Entries that no kept manifold reaches are zero.
        """
        samples, cutoff = self.beta.shape[0], self.beta.shape[1]
        up = np.zeros((samples, cutoff + 2), dtype=complex)
        mid = np.zeros((samples, cutoff + 2), dtype=complex)
        low = np.zeros((samples, cutoff + 2), dtype=complex)
        # |1_x, k> belongs to manifold k + 1
        up[:, :cutoff] = self.beta[:, :, 0]
        mid[:, 0] = self.beta_block0[:, 0]
        mid[:, 1 : cutoff + 1] = self.beta[:, :, 1]
        # |-1_x, k> belongs to manifold k - 1, |-1_x, 0> is the ground state
        low[:, 0] = self.beta0
        low[:, 1] = self.beta_block0[:, 1]
        low[:, 2 : cutoff + 2] = self.beta[:, :, 2]
        return up, mid, low


def default_cutoff(disp: Displacement, alpha: float) -> int:
    """Larger of the configured cutoff and the tail-safe cutoff at |alpha - lambda| plus guard levels."""
    tail_cutoff = minimal_cutoff(abs(alpha - disp.lam)) + settings.solver.dynamics_guard_levels
    return max(settings.solver.dynamics_cutoff, tail_cutoff)


def build_manifolds(params: ModelParams, disp: Displacement, cutoff: int) -> ManifoldSet:
    if cutoff < 1:
        raise DomainError(f"manifold cutoff must be >= 1, got {cutoff}")
    block0 = grwa_block0(params, disp)
    blocks = grwa_blocks(params, disp, cutoff)
    fallbacks = sum(block.solver == "numeric" for block in blocks)
    if fallbacks:
        logger.debug(f"{fallbacks} of {cutoff} manifolds used the numeric eigensolver")
    return ManifoldSet(
        ground_energy=ground_state(params, disp).energy,
        block0_values=block0.values,
        block0_vectors=block0.vectors,
        values=np.array([block.values for block in blocks]),
        vectors=np.array([block.vectors for block in blocks]),
    )


def evolve(manifolds: ManifoldSet, coeffs: DynamicsCoeffs, grid: TimeGrid) -> BetaTrajectory:
    """
    beta(t) = sum_j exp(-i E^j t) D^j c^j in every manifold.

    D_0 = chi_0, D_0^j = c_{0,0}^j chi_{0,0} + c_{-1,0}^j chi_{-1,0} and
    D_n^j = sum_m c_{m,n}^j chi_{m,n}.
    """
    if manifolds.cutoff != coeffs.cutoff:
        raise DomainError(f"manifold cutoff {manifolds.cutoff} differs from coefficient cutoff {coeffs.cutoff}")
    times = grid.times

    d0 = coeffs.chi0
    d_block0 = manifolds.block0_vectors.T @ coeffs.chi_block0
    d = np.einsum("nmj,nm->nj", manifolds.vectors, coeffs.chi)

    beta0 = np.exp(-1j * manifolds.ground_energy * times) * d0
    phases0 = np.exp(-1j * np.outer(times, manifolds.block0_values))
    beta_block0 = np.einsum("tj,j,mj->tm", phases0, d_block0, manifolds.block0_vectors)
    phases = np.exp(-1j * times[:, None, None] * manifolds.values[None, :, :])
    beta = np.einsum("tnj,nj,nmj->tnm", phases, d, manifolds.vectors)

    return BetaTrajectory(
        grid=grid,
        beta0=beta0,
        beta_block0=beta_block0,
        beta=beta,
        d0=d0,
        d_block0=d_block0,
        d=d,
    )


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """u v* + v u*, summed over Fock levels."""
    return np.sum(2.0 * np.real(u * np.conj(v)), axis=1)


def _square(u: np.ndarray) -> np.ndarray:
    return np.sum(np.abs(u) ** 2, axis=1)


def jz_series(trajectory: BetaTrajectory) -> np.ndarray:
    """<J_z>(t): J_z couples |1_x> and |-1_x> to |0_x> at equal Fock level with weight 1/sqrt(2)."""
    up, mid, low = trajectory.fock_amplitudes()
    return ROOT_HALF * (_cross(up, mid) + _cross(low, mid))


def population_series(trajectory: BetaTrajectory) -> np.ndarray:
    """P_-1(t) = sum_k |<-1_z| (up, mid, low)_k|^2 with <-1_z| = (1/2, -1/sqrt(2), 1/2)."""
    up, mid, low = trajectory.fock_amplitudes()
    population = 0.25 * _square(up) + 0.5 * _square(mid) + 0.25 * _square(low)
    population += 0.25 * _cross(low, up)
    population -= 0.5 * ROOT_HALF * (_cross(mid, up) + _cross(mid, low))
    return population


def analytic_dynamics(
    params: ModelParams,
    disp: Displacement,
    alpha: float,
    grid: TimeGrid,
    cutoff: Optional[int] = None,
) -> TimeSeries:
    """
    <J_z>(t) and P_-1(t) from |-1_z> x |alpha> under the displaced-frame GRWA.

    Args:
        params (ModelParams): Model parameters.
        disp (Displacement): Displacement; GRWA when its strategy is GRWA_FIXED.
        alpha (float): Coherent amplitude, alpha >= 0.
        grid (TimeGrid): Sample times.
        cutoff (Optional[int]): Highest manifold kept. Defaults to the tail-safe cutoff.

    Returns:
        TimeSeries: Traces with the amplitude norm per sample.
    """
    cutoff = default_cutoff(disp, alpha) if cutoff is None else cutoff
    coeffs = initial_coeffs(disp, alpha, cutoff)
    manifolds = build_manifolds(params, disp, cutoff)
    trajectory = evolve(manifolds, coeffs, grid)
    logger.debug(f"Analytic dynamics for {params}, lambda={disp.lam}: {len(grid)} samples, cutoff {cutoff}")
    return TimeSeries(
        grid=grid,
        jz=jz_series(trajectory),
        p_minus1=population_series(trajectory),
        method=method_tag(disp),
        initial_state=InitialState(alpha=alpha, lam=disp.lam, cutoff=cutoff, tail=coeffs.tail),
        Omega=params.Omega,
        norm=trajectory.norm,
        metadata={"overlap_weight": trajectory.overlap_weight, "strategy": str(disp.strategy)},
    )
