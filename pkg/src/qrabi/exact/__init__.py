from .eigen import EigenSystem, eig_sym
from .solver import (
    default_truncation,
    dynamics_truncation,
    ed_converged,
    ed_dynamics,
    ed_eigensystem,
    ed_mean_photon,
    ed_spectrum,
)

__all__ = [
    "EigenSystem",
    "default_truncation",
    "dynamics_truncation",
    "ed_converged",
    "ed_dynamics",
    "ed_eigensystem",
    "ed_mean_photon",
    "ed_spectrum",
    "eig_sym",
]
