"""Coherent-state Fock weights with tail control."""

import math
from typing import Optional

import numpy as np

from qrabi.config import settings
from qrabi.exceptions import DomainError, TruncationError

# terms below this weight end the tail summation
_NEGLIGIBLE = 1e-300
_MAX_EXPONENT = 700.0


def _weights(alpha: float, cutoff: int) -> np.ndarray:
    if 0.5 * alpha * alpha > _MAX_EXPONENT:
        raise DomainError(f"coherent amplitude {alpha} underflows the vacuum weight")
    zeta = np.empty(cutoff + 1)
    zeta[0] = math.exp(-0.5 * alpha * alpha)
    for n in range(cutoff):
        zeta[n + 1] = zeta[n] * alpha / math.sqrt(n + 1)
    return zeta


def coherent_tail(alpha: float, cutoff: int) -> float:
    """Weight sum_{n > cutoff} |zeta_n|^2 left outside the cutoff."""
    zeta = _weights(alpha, cutoff)[-1]
    tail = 0.0
    n = cutoff
    while True:
        zeta = zeta * alpha / math.sqrt(n + 1)
        n += 1
        weight = zeta * zeta
        tail += weight
        # past the Poisson peak the terms only shrink
        if n > alpha * alpha and weight < max(_NEGLIGIBLE, tail * 1e-17):
            return tail


def minimal_cutoff(alpha: float, tol: Optional[float] = None) -> int:
    """Smallest cutoff whose coherent tail is below tol."""
    tol = settings.solver.coherent_tail_tol if tol is None else tol
    cutoff = 0
    while coherent_tail(alpha, cutoff) >= tol:
        cutoff += 1
    return cutoff


def coherent_weights(alpha: float, cutoff: int, tol: Optional[float] = None) -> np.ndarray:
    """
    zeta_n = exp(-alpha^2 / 2) alpha^n / sqrt(n!) for n = 0..cutoff.

    Computed by the running product zeta_{n+1} = zeta_n alpha / sqrt(n + 1).

    Args:
        alpha (float): Real coherent amplitude.
        cutoff (int): Highest Fock index kept.
        tol (Optional[float]): Largest tolerated weight outside the cutoff.

    Returns:
        np.ndarray: Shape (cutoff + 1,).

    Raises:
        TruncationError: If the weight beyond the cutoff exceeds tol.
    """
    tol = settings.solver.coherent_tail_tol if tol is None else tol
    tail = coherent_tail(alpha, cutoff)
    if tail >= tol:
        raise TruncationError(
            f"coherent amplitude {alpha} leaves weight {tail:.3e} beyond cutoff {cutoff} (tolerance {tol:.1e})"
        )
    return _weights(alpha, cutoff)
