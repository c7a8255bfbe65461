from .adiabatic import (
    AdiabaticBlock,
    adiabatic_block,
    adiabatic_blocks,
    adiabatic_ground_energy,
    solve_lambda_adiabatic,
)
from .blocks import (
    Block0,
    GroundState,
    GrwaBlock,
    ground_state,
    grwa_block,
    grwa_block0,
    grwa_blocks,
    pair_eigensystem,
)
from .cubic import solve_cubic
from .displacement import (
    Displacement,
    LambdaStrategy,
    closed_form_lambda,
    counter_rotating_coeff,
    counter_rotating_profile,
    energy_function,
    exact_root_lambda,
    ground_energy,
    self_consistent_lambda,
    solve_lambda,
    stationarity_residual,
)
from .spectrum import (
    SpectrumLevel,
    SpectrumTable,
    assemble_adiabatic_spectrum,
    assemble_spectrum,
    method_tag,
)

__all__ = [
    "AdiabaticBlock",
    "Block0",
    "Displacement",
    "GroundState",
    "GrwaBlock",
    "LambdaStrategy",
    "SpectrumLevel",
    "SpectrumTable",
    "adiabatic_block",
    "adiabatic_blocks",
    "adiabatic_ground_energy",
    "assemble_adiabatic_spectrum",
    "assemble_spectrum",
    "closed_form_lambda",
    "counter_rotating_coeff",
    "counter_rotating_profile",
    "energy_function",
    "exact_root_lambda",
    "ground_energy",
    "ground_state",
    "grwa_block",
    "grwa_block0",
    "grwa_blocks",
    "method_tag",
    "pair_eigensystem",
    "self_consistent_lambda",
    "solve_cubic",
    "solve_lambda",
    "stationarity_residual",
]
