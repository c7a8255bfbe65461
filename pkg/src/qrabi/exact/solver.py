"""
Exact-diagonalization benchmark for the two-qubit Rabi model.

Dense eigendecomposition of the Fock-truncated Hamiltonian gives the
reference spectrum, photon numbers and dynamics every approximation is
compared with.
"""

from functools import lru_cache
from typing import List, Optional

import numpy as np

from qrabi.config import settings
from qrabi.dynamics.coherent import coherent_tail, coherent_weights, minimal_cutoff
from qrabi.dynamics.series import InitialState, TimeGrid, TimeSeries
from qrabi.exceptions import ConvergenceError, DomainError, TruncationError
from qrabi.logging import logger
from qrabi.model import (
    FockTruncation,
    ModelParams,
    build_hamiltonian,
    jz_operator,
    number_operator,
    spin_triplet,
)

from .eigen import EigenSystem, eig_sym

# time samples propagated per matrix product
_TIME_CHUNK = 512


def default_truncation() -> FockTruncation:
    return FockTruncation(settings.solver.n_max)


@lru_cache(maxsize=8)
def ed_eigensystem(params: ModelParams, trunc: FockTruncation) -> EigenSystem:
    """Cached full eigensystem of the truncated Hamiltonian."""
    logger.debug(f"Diagonalizing {params} at n_max={trunc.n_max}")
    return eig_sym(build_hamiltonian(params, trunc), tie_breaker=number_operator(trunc))


def _lowest(params: ModelParams, trunc: FockTruncation, k: int) -> np.ndarray:
    if k < 1 or k > trunc.dimension:
        raise DomainError(f"level count k={k} outside 1..{trunc.dimension}")
    return ed_eigensystem(params, trunc).values[:k]


def ed_converged(
    params: ModelParams,
    trunc: Optional[FockTruncation] = None,
    k: int = 7,
    tol: Optional[float] = None,
) -> bool:
    """True iff doubling n_max moves each of the k lowest levels by less than tol."""
    trunc = trunc or default_truncation()
    tol = settings.solver.convergence_tol if tol is None else tol
    coarse = _lowest(params, trunc, k)
    fine = _lowest(params, trunc.doubled(), k)
    shift = float(np.max(np.abs(fine - coarse)))
    if shift >= tol:
        logger.warning(f"ED not converged at n_max={trunc.n_max}: level shift {shift:.3e} >= {tol:.1e}")
        return False
    return True


def ed_spectrum(
    params: ModelParams,
    trunc: Optional[FockTruncation] = None,
    k: int = 7,
    verify: bool = True,
) -> List[float]:
    """
    Lowest k eigenvalues of the model Hamiltonian.

    Raises:
        ConvergenceError: If verify is set and the levels move under truncation doubling.
    """
    trunc = trunc or default_truncation()
    if verify and not ed_converged(params, trunc, k):
        raise ConvergenceError(f"lowest {k} levels not converged at n_max={trunc.n_max} for {params}")
    return [float(v) for v in _lowest(params, trunc, k)]


def ed_mean_photon(params: ModelParams, trunc: Optional[FockTruncation] = None, level: int = 0) -> float:
    """<v|a^dagger a|v> for the level-th eigenvector."""
    trunc = trunc or default_truncation()
    system = ed_eigensystem(params, trunc)
    if not 0 <= level < system.size:
        raise DomainError(f"level {level} outside 0..{system.size - 1}")
    vector = system.vectors[:, level]
    photons = np.repeat(np.arange(trunc.fock_size, dtype=float), 3)
    return float(np.sum(photons * vector * vector))


def dynamics_truncation(alpha: float) -> FockTruncation:
    """Larger of the static default and the smallest coherent-tail-safe cutoff."""
    return FockTruncation(max(settings.solver.n_max, minimal_cutoff(alpha)))


def ed_dynamics(
    params: ModelParams,
    alpha: float,
    grid: TimeGrid,
    trunc: Optional[FockTruncation] = None,
) -> TimeSeries:
    """
    <J_z>(t) and P_-1(t) from |-1_z> x |alpha> by eigenbasis expansion.

    Raises:
        TruncationError: If the coherent state does not fit in the truncation.
    """
    if alpha < 0:
        raise DomainError(f"coherent amplitude must be nonnegative, got {alpha}")
    trunc = trunc or dynamics_truncation(alpha)
    tail = coherent_tail(alpha, trunc.n_max)
    if tail >= settings.solver.coherent_tail_tol:
        raise TruncationError(f"n_max={trunc.n_max} too small for alpha={alpha} (tail {tail:.3e})")

    spin = spin_triplet()
    system = ed_eigensystem(params, trunc)
    initial = np.kron(coherent_weights(alpha, trunc.n_max), spin.minus_one_z)
    overlaps = system.vectors.T @ initial
    jz = jz_operator(trunc)

    times = grid.times
    jz_values = np.empty(times.shape[0])
    population = np.empty(times.shape[0])
    norm = np.empty(times.shape[0])
    for start in range(0, times.shape[0], _TIME_CHUNK):
        chunk = times[start : start + _TIME_CHUNK]
        phases = np.exp(-1j * np.outer(system.values, chunk))
        states = system.vectors @ (overlaps[:, None] * phases)
        jz_values[start : start + chunk.shape[0]] = np.real(np.sum(states.conj() * (jz @ states), axis=0))
        by_fock = states.reshape(trunc.fock_size, 3, -1)
        amplitudes = np.einsum("s,nst->nt", spin.minus_one_z, by_fock)
        population[start : start + chunk.shape[0]] = np.sum(np.abs(amplitudes) ** 2, axis=0)
        norm[start : start + chunk.shape[0]] = np.sum(np.abs(states) ** 2, axis=0)

    logger.debug(f"ED dynamics for {params}, alpha={alpha}: {len(grid)} samples at n_max={trunc.n_max}")
    return TimeSeries(
        grid=grid,
        jz=jz_values,
        p_minus1=population,
        method="ed",
        initial_state=InitialState(alpha=alpha, lam=0.0, cutoff=trunc.n_max, tail=tail),
        Omega=params.Omega,
        norm=norm,
    )
