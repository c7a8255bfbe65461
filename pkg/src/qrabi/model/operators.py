"""Truncated Fock-space operators and displacement oracles."""

import numpy as np
from scipy.linalg import coshm, expm, sinhm

from .params import FockTruncation
from .spin import spin_triplet


def annihilation(size: int) -> np.ndarray:
    """Matrix of a on Fock levels 0..size-1."""
    return np.diag(np.sqrt(np.arange(1.0, size)), k=1)


def number(size: int) -> np.ndarray:
    return np.diag(np.arange(float(size)))


def displacement_generator(lam: float, size: int) -> np.ndarray:
    """lambda (a^dagger - a), real antisymmetric."""
    a = annihilation(size)
    return lam * (a.T - a)


def displacement_cosh(lam: float, size: int) -> np.ndarray:
    """cosh[lambda (a^dagger - a)] by truncated matrix exponentiation."""
    return np.real(coshm(displacement_generator(lam, size)))


def displacement_sinh(lam: float, size: int) -> np.ndarray:
    """sinh[lambda (a^dagger - a)] by truncated matrix exponentiation."""
    return np.real(sinhm(displacement_generator(lam, size)))


def number_operator(trunc: FockTruncation) -> np.ndarray:
    """a^dagger a on the Fock-major triplet basis."""
    return np.kron(number(trunc.fock_size), np.eye(3))


def jz_operator(trunc: FockTruncation) -> np.ndarray:
    return np.kron(np.eye(trunc.fock_size), spin_triplet().jz)


def excitation_number(trunc: FockTruncation) -> np.ndarray:
    """Diagonal of N = a^dagger a + J_x, conserved by the GRWA Hamiltonian."""
    fock = np.arange(trunc.fock_size, dtype=float)
    spin = np.diag(spin_triplet().jx)
    return (fock[:, None] + spin[None, :]).ravel()


def displacement_unitary(lam: float, trunc: FockTruncation) -> np.ndarray:
    """U = exp[lambda J_z (a^dagger - a)] on the truncated basis (orthogonal)."""
    generator = np.kron(displacement_generator(1.0, trunc.fock_size), spin_triplet().jz)
    return expm(lam * generator)
