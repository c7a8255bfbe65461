"""
Mean photon number of the approximate eigenstates.

In the displaced frame a^dagger a becomes
a^dagger a - lambda J_z (a^dagger + a) + lambda^2 J_z^2, whose expectation in
the block eigenstates reduces to the closed forms below. All block
coefficients are real, so every conjugate pair collapses to a square.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from qrabi.exceptions import DomainError
from qrabi.model import ModelParams
from qrabi.vgrwa import AdiabaticBlock, Block0, Displacement, GrwaBlock, SpectrumTable


@dataclass(frozen=True)
class PhotonObservable:
    """
    Photon number of one level.

    Attributes:
        method (str): "vgrwa", "grwa", "adiabatic" or "ed".
        level (str): Provenance label ("g", "0.j", "n.j") or ED index.
        value (float): <a^dagger a>.
        chi0_grwa (Optional[float]): chi_0 of the GRWA closed form, set for the GRWA ground state.
    """

    method: str
    level: str
    value: float
    chi0_grwa: Optional[float] = None


def photon_ground_variational(disp: Displacement) -> float:
    return 0.5 * disp.lam * disp.lam


def grwa_chi0(params: ModelParams) -> float:
    """chi_0 = sqrt(2) g^2 / (Omega omega) exp(g^2 / (2 omega^2))."""
    if params.Omega <= 0:
        raise DomainError("the GRWA photon number needs Omega > 0")
    g, omega = params.g, params.omega
    return math.sqrt(2.0) * g * g / (params.Omega * omega) * math.exp(0.5 * g * g / (omega * omega))


def photon_ground_grwa(params: ModelParams) -> float:
    """(1 + chi_0 / sqrt(chi_0^2 + 8)) g^2 / (2 omega^2)."""
    chi0 = grwa_chi0(params)
    return 0.5 * (1.0 + chi0 / math.sqrt(chi0 * chi0 + 8.0)) * params.g**2 / params.omega**2


def photon_manifold0(block0: Block0, j: int, disp: Displacement) -> float:
    """Level j (0 = lower) of manifold 0."""
    c00, cm10 = block0.coefficients(j)
    shifted = disp.lam / math.sqrt(2.0) * c00 - cm10
    return float(0.5 * disp.lam**2 + shifted * shifted)


def photon_manifold_n(block: GrwaBlock, j: int, disp: Displacement) -> float:
    """Level j (0 = lowest) of manifold n >= 1."""
    n, lam = block.n, disp.lam
    c1, c0, cm1 = block.coefficients(j)
    value = n + 0.5 * lam * lam
    value += 0.5 * lam * lam * c0 * c0 - c1 * c1 + cm1 * cm1
    value -= math.sqrt(n) * lam / math.sqrt(2.0) * (c0 * c1 + c1 * c0)
    value -= math.sqrt(n + 1) * lam / math.sqrt(2.0) * (cm1 * c0 + c0 * cm1)
    return float(value)


def photon_adiabatic(block: AdiabaticBlock, j: int, disp: Displacement) -> float:
    """n + lambda^2 <J_z^2>; <J_z^2> is 1 on |0_x> and (1 + 2 c_- c_+)/2 on the outer pair."""
    minus, zero, plus = block.vectors[:, j]
    jz_squared = zero * zero + 0.5 * (minus * minus + plus * plus) + minus * plus
    return float(block.n + disp.lam**2 * jz_squared)


def photon_levels(params: ModelParams, table: SpectrumTable, k: int) -> List[PhotonObservable]:
    """
    Photon numbers of the k lowest levels of an assembled spectrum.

    The GRWA ground state uses its own closed form; every other level uses
    the block coefficients of the table.
    """
    disp = table.disp
    photons = []
    for level in table.lowest(k):
        chi0 = None
        if table.method == "adiabatic":
            value = photon_adiabatic(table.adiabatic[level.manifold], level.branch - 1, disp)
        elif level.manifold is None:
            if table.method == "grwa":
                chi0 = grwa_chi0(params)
                value = photon_ground_grwa(params)
            else:
                value = photon_ground_variational(disp)
        elif level.manifold == 0:
            value = photon_manifold0(table.block0, level.branch - 1, disp)
        else:
            value = photon_manifold_n(table.block(level.manifold), level.branch - 1, disp)
        photons.append(PhotonObservable(method=table.method, level=level.label, value=float(value), chi0_grwa=chi0))
    return photons


def match_levels(approx: Sequence[float], exact: Sequence[float]) -> List[Tuple[int, int]]:
    """
    Energy-nearest one-to-one assignment of approximate to exact levels.

    Returns:
        List[Tuple[int, int]]: (approx index, exact index) pairs ordered by approx index.
    """
    approx = np.asarray(approx, dtype=float)
    exact = np.asarray(exact, dtype=float)
    if approx.size > exact.size:
        raise DomainError(f"cannot match {approx.size} levels against {exact.size}")
    rows, columns = linear_sum_assignment(np.abs(approx[:, None] - exact[None, :]))
    return sorted(zip(rows.tolist(), columns.tolist()))
