from .coeffs import DynamicsCoeffs, initial_coeffs
from .coherent import coherent_tail, coherent_weights, minimal_cutoff
from .evolution import (
    BetaTrajectory,
    ManifoldSet,
    analytic_dynamics,
    build_manifolds,
    default_cutoff,
    evolve,
    jz_series,
    population_series,
)
from .series import InitialState, TimeGrid, TimeSeries

__all__ = [
    "BetaTrajectory",
    "DynamicsCoeffs",
    "InitialState",
    "ManifoldSet",
    "TimeGrid",
    "TimeSeries",
    "analytic_dynamics",
    "build_manifolds",
    "coherent_tail",
    "coherent_weights",
    "default_cutoff",
    "evolve",
    "initial_coeffs",
    "jz_series",
    "minimal_cutoff",
    "population_series",
]
