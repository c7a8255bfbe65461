"""
Spin-1 (triplet) operator algebra in the J_x eigenbasis.

Basis order is (|1_x>, |0_x>, |-1_x>). Phases are fixed so that J_x is real
diagonal, J_z is real symmetric and i J_y is real antisymmetric; every
Hamiltonian built from them is then real symmetric.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# spin index s inside a Fock-major basis index 3 n + s
PLUS_X = 0
ZERO_X = 1
MINUS_X = 2

JX_EIGENVALUES = (1, 0, -1)


@dataclass(frozen=True)
class SpinTriplet:
    """Spin-1 matrices for the collective qubit operators.

    Attributes:
        jx (np.ndarray): diag(1, 0, -1).
        jy (np.ndarray): Complex Hermitian J_y.
        jz (np.ndarray): Real symmetric J_z.
        i_jy (np.ndarray): Real antisymmetric i J_y.
        jplus (np.ndarray): J_z - i J_y, raises the J_x quantum number.
        jminus (np.ndarray): J_z + i J_y, lowers it.
        minus_one_z (np.ndarray): J_z eigenvector with eigenvalue -1.
    """

    jx: np.ndarray
    jy: np.ndarray
    jz: np.ndarray
    i_jy: np.ndarray
    jplus: np.ndarray
    jminus: np.ndarray
    minus_one_z: np.ndarray

    @property
    def jz_squared(self) -> np.ndarray:
        return self.jz @ self.jz

    @property
    def casimir(self) -> np.ndarray:
        return (self.jx @ self.jx + self.jy @ self.jy + self.jz @ self.jz).real


@lru_cache(maxsize=1)
def spin_triplet() -> SpinTriplet:
    """Build the shared, read-only spin-1 operator set."""
    r = 1.0 / np.sqrt(2.0)
    jx = np.diag([1.0, 0.0, -1.0])
    jz = r * np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    i_jy = r * np.array([[0.0, -1.0, 0.0], [1.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
    jy = -1j * i_jy
    jplus = jz - i_jy
    jminus = jz + i_jy
    minus_one_z = np.array([0.5, -r, 0.5])

    for array in (jx, jy, jz, i_jy, jplus, jminus, minus_one_z):
        array.setflags(write=False)

    return SpinTriplet(
        jx=jx,
        jy=jy,
        jz=jz,
        i_jy=i_jy,
        jplus=jplus,
        jminus=jminus,
        minus_one_z=minus_one_z,
    )
