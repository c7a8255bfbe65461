"""
Dense matrix constructions of the model Hamiltonians.

All matrices act on the Fock-major basis index 3 n + s with
s = 0, 1, 2 for |1_x>, |0_x>, |-1_x>. They are used as oracles for the
analytical block constructions and as the input of exact diagonalization.
"""

import numpy as np

from qrabi.special import fcoeff_table

from .operators import (
    annihilation,
    displacement_cosh,
    displacement_sinh,
    excitation_number,
    number,
)
from .params import FockTruncation, ModelParams
from .spin import spin_triplet


def displacement_energy(params: ModelParams, lam: float) -> float:
    """epsilon_lambda = (lambda^2 omega - 2 g lambda) / 2."""
    return 0.5 * (lam * lam * params.omega - 2.0 * params.g * lam)


def build_hamiltonian(params: ModelParams, trunc: FockTruncation) -> np.ndarray:
    """omega a^dagger a + Omega J_x + g J_z (a^dagger + a)."""
    spin = spin_triplet()
    size = trunc.fock_size
    a = annihilation(size)
    identity = np.eye(size)

    hamiltonian = params.omega * np.kron(number(size), np.eye(3))
    hamiltonian += params.Omega * np.kron(identity, spin.jx)
    hamiltonian += params.g * np.kron(a + a.T, spin.jz)
    return hamiltonian


def build_transformed_hamiltonian(params: ModelParams, lam: float, trunc: FockTruncation) -> np.ndarray:
    """
    U H U^dagger with U = exp[lambda J_z (a^dagger - a)], built term by term.

    cosh and sinh of lambda (a^dagger - a) come from truncated exponentiation,
    so only levels away from the truncation edge reproduce the original
    spectrum.
    """
    spin = spin_triplet()
    size = trunc.fock_size
    a = annihilation(size)
    identity = np.eye(size)

    hamiltonian = params.omega * np.kron(number(size), np.eye(3))
    hamiltonian += 2.0 * displacement_energy(params, lam) * np.kron(identity, spin.jz_squared)
    hamiltonian += (params.g - lam * params.omega) * np.kron(a + a.T, spin.jz)
    hamiltonian += params.Omega * np.kron(displacement_cosh(lam, size), spin.jx)
    hamiltonian += params.Omega * np.kron(displacement_sinh(lam, size), spin.i_jy)
    return hamiltonian


def build_grwa_hamiltonian(params: ModelParams, lam: float, trunc: FockTruncation) -> np.ndarray:
    """
    Excitation-conserving Hamiltonian of the variational GRWA, from operator products.

    omega a^dagger a + Omega J_x F_0(a^dagger a)
    + (lambda^2 omega - 2 g lambda)/4 (J_+ J_- + J_- J_+)
    + 1/2 [J_+ (lambda' + Omega F_1(a^dagger a)) a + h.c.]
    """
    spin = spin_triplet()
    size = trunc.fock_size
    a = annihilation(size)
    identity = np.eye(size)
    f0 = np.diag(fcoeff_table(lam, 0, trunc.n_max))
    f1 = np.diag(fcoeff_table(lam, 1, trunc.n_max))
    lam_prime = params.g - lam * params.omega

    hamiltonian = params.omega * np.kron(number(size), np.eye(3))
    hamiltonian += params.Omega * np.kron(f0, spin.jx)
    ladder_sum = spin.jplus @ spin.jminus + spin.jminus @ spin.jplus
    hamiltonian += 0.5 * displacement_energy(params, lam) * np.kron(identity, ladder_sum)
    rotating = 0.5 * np.kron((lam_prime * identity + params.Omega * f1) @ a, spin.jplus)
    hamiltonian += rotating + rotating.T
    return hamiltonian


def project_excitation_conserving(matrix: np.ndarray, trunc: FockTruncation) -> np.ndarray:
    """Keep only the entries that conserve N = a^dagger a + J_x."""
    excitations = excitation_number(trunc)
    mask = np.isclose(excitations[:, None], excitations[None, :])
    return np.where(mask, matrix, 0.0)
