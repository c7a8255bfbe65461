"""Expansion of the displaced initial state over the GRWA manifold bases."""

import math
from dataclasses import dataclass

import numpy as np

from qrabi.exceptions import DomainError
from qrabi.vgrwa import Displacement

from .coherent import coherent_tail, coherent_weights


@dataclass(frozen=True)
class DynamicsCoeffs:
    """
    Initial amplitudes of |-1_z> x |alpha - lambda> on the manifold bases.

    Attributes:
        chi0 (float): Amplitude on |-1_x, 0>, zeta_0 / 2.
        chi_block0 (np.ndarray): (chi_{0,0}, chi_{-1,0}) on (|0_x, 0>, |-1_x, 1>).
        chi (np.ndarray): Shape (cutoff, 3); row n-1 holds (chi_{1,n}, chi_{0,n}, chi_{-1,n}).
        displaced_alpha (float): alpha - lambda.
        tail (float): Coherent weight beyond Fock level cutoff + 1.
    """

    chi0: float
    chi_block0: np.ndarray
    chi: np.ndarray
    displaced_alpha: float
    tail: float

    @property
    def cutoff(self) -> int:
        return self.chi.shape[0]

    @property
    def total_weight(self) -> float:
        return float(self.chi0**2 + np.sum(self.chi_block0**2) + np.sum(self.chi**2))


def initial_coeffs(disp: Displacement, alpha: float, cutoff: int) -> DynamicsCoeffs:
    """
    chi_0 = zeta_0/2, chi_{-1,n} = zeta_{n+1}/2, chi_{0,n} = -zeta_n/sqrt(2), chi_{1,n} = zeta_{n-1}/2.

    The coherent weights are taken at the displaced amplitude alpha - lambda.

    Args:
        disp (Displacement): Displacement of the frame.
        alpha (float): Original-frame coherent amplitude, alpha >= 0.
        cutoff (int): Highest manifold index kept.

    Returns:
        DynamicsCoeffs: Real initial amplitudes.

    Raises:
        TruncationError: If the coherent tail beyond the cutoff is not negligible.
    """
    if alpha < 0:
        raise DomainError(f"coherent amplitude must be nonnegative, got {alpha}")
    if cutoff < 1:
        raise DomainError(f"manifold cutoff must be >= 1, got {cutoff}")
    shifted = alpha - disp.lam
    zeta = coherent_weights(shifted, cutoff + 1)
    half, root_half = 0.5, 1.0 / math.sqrt(2.0)

    n = np.arange(1, cutoff + 1)
    chi = np.column_stack([half * zeta[n - 1], -root_half * zeta[n], half * zeta[n + 1]])
    chi_block0 = np.array([-root_half * zeta[0], half * zeta[1]])
    for array in (chi, chi_block0):
        array.setflags(write=False)
    return DynamicsCoeffs(
        chi0=half * zeta[0],
        chi_block0=chi_block0,
        chi=chi,
        displaced_alpha=shifted,
        tail=coherent_tail(shifted, cutoff + 1),
    )
