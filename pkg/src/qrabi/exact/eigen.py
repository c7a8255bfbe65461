"""Dense symmetric eigendecomposition with deterministic ordering and signs."""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from qrabi.config import settings
from qrabi.exceptions import EigenSolverError, NonSymmetricMatrixError
from qrabi.logging import logger


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues and orthonormal column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def size(self) -> int:
        return self.values.shape[0]

    def residual(self, matrix: np.ndarray) -> float:
        """max_k ||H v_k - e_k v_k||_inf."""
        return float(np.max(np.abs(matrix @ self.vectors - self.vectors * self.values)))

    def orthonormality_error(self) -> float:
        gram = self.vectors.T @ self.vectors
        return float(np.max(np.abs(gram - np.eye(self.size))))


def _degenerate_groups(values: np.ndarray, tol: float) -> List[range]:
    groups = []
    start = 0
    for k in range(1, values.shape[0] + 1):
        if k == values.shape[0] or values[k] - values[k - 1] > tol * max(1.0, abs(values[k])):
            groups.append(range(start, k))
            start = k
    return groups


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude component of each column positive."""
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def eig_sym(
    matrix: np.ndarray,
    tie_breaker: Optional[np.ndarray] = None,
    symmetry_tol: Optional[float] = None,
    degeneracy_tol: Optional[float] = None,
) -> EigenSystem:
    """
    Full spectrum of a real symmetric matrix.

    Degenerate eigenvalues are resolved by diagonalizing `tie_breaker` (for
    the Rabi Hamiltonian, the photon number) inside each degenerate subspace
    and ordering by its ascending expectation value.

    Args:
        matrix (np.ndarray): Real symmetric matrix.
        tie_breaker (Optional[np.ndarray]): Symmetric operator ordering degenerate levels.
        symmetry_tol (Optional[float]): Accepted max |H - H^T|, relative to max(1, max|H|).
        degeneracy_tol (Optional[float]): Relative energy window for a degenerate group.

    Returns:
        EigenSystem: Ascending values, columns with the largest component positive.

    Raises:
        NonSymmetricMatrixError: If the input is not square or not symmetric.
        EigenSolverError: If LAPACK fails to converge.
    """
    symmetry_tol = settings.solver.eig_symmetry_tol if symmetry_tol is None else symmetry_tol
    degeneracy_tol = settings.solver.degeneracy_tol if degeneracy_tol is None else degeneracy_tol

    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonSymmetricMatrixError(f"expected a square matrix, got shape {matrix.shape}")
    scale = max(1.0, float(np.max(np.abs(matrix))) if matrix.size else 1.0)
    asymmetry = float(np.max(np.abs(matrix - matrix.T))) if matrix.size else 0.0
    if asymmetry > symmetry_tol * scale:
        raise NonSymmetricMatrixError(f"matrix asymmetry {asymmetry:.3e} exceeds {symmetry_tol:.1e}")

    try:
        values, vectors = np.linalg.eigh(0.5 * (matrix + matrix.T))
    except np.linalg.LinAlgError as e:
        raise EigenSolverError(f"symmetric eigensolver failed: {e}") from e

    if tie_breaker is not None:
        for group in _degenerate_groups(values, degeneracy_tol):
            if len(group) < 2:
                continue
            columns = vectors[:, group.start : group.stop]
            projected = columns.T @ tie_breaker @ columns
            _, rotation = np.linalg.eigh(0.5 * (projected + projected.T))
            vectors[:, group.start : group.stop] = columns @ rotation
            logger.debug(f"Resolved {len(group)}-fold degeneracy at E = {values[group.start]:.12g}")

    vectors = _fix_signs(vectors)
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenSystem(values=values, vectors=vectors)
