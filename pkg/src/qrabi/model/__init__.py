from .hamiltonian import (
    build_grwa_hamiltonian,
    build_hamiltonian,
    build_transformed_hamiltonian,
    displacement_energy,
    project_excitation_conserving,
)
from .operators import (
    annihilation,
    displacement_cosh,
    displacement_generator,
    displacement_sinh,
    displacement_unitary,
    excitation_number,
    jz_operator,
    number,
    number_operator,
)
from .params import FockTruncation, ModelParams
from .spin import MINUS_X, PLUS_X, ZERO_X, SpinTriplet, spin_triplet

__all__ = [
    "FockTruncation",
    "MINUS_X",
    "ModelParams",
    "PLUS_X",
    "SpinTriplet",
    "ZERO_X",
    "annihilation",
    "build_grwa_hamiltonian",
    "build_hamiltonian",
    "build_transformed_hamiltonian",
    "displacement_cosh",
    "displacement_generator",
    "displacement_energy",
    "displacement_sinh",
    "displacement_unitary",
    "excitation_number",
    "jz_operator",
    "number",
    "number_operator",
    "project_excitation_conserving",
    "spin_triplet",
]
