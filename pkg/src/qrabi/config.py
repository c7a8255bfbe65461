"""
Configuration module defining solver and runtime settings.

This module contains Pydantic-based settings classes that load configuration
from environment variables (or a `.env` file) with appropriate prefixes.
It covers the numerical defaults shared by every solver (Fock truncation,
tolerances, dynamics cutoffs) and the runtime knobs of the command line
(worker pool size, logging).

Example:
    To load all settings at once:
        settings = Settings.load_settings()
"""

import os
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverSettings(BaseSettings):
    """
    Numerical defaults shared by the exact and analytical solvers.

    Attributes:
        n_max (int): Highest retained Fock level for exact diagonalization.
        fock_cap (int): Largest n + m accepted by the F_m(n) evaluator.
        eig_symmetry_tol (float): Largest |H - H^T| accepted by the eigensolver.
        degeneracy_tol (float): Energy window treated as a degenerate level.
        convergence_tol (float): Truncation-doubling tolerance for ED levels.
        coherent_tail_tol (float): Largest coherent-state weight left outside a cutoff.
        dynamics_guard_levels (int): Extra manifolds kept above the coherent tail cutoff.
        dynamics_cutoff (int): Default number of manifolds used by analytical dynamics.
        time_samples (int): Default number of samples per dynamics window.
    """

    model_config = SettingsConfigDict(env_file=".env", env_prefix="QRABI_SOLVER_", extra="ignore")
    n_max: int = Field(200, json_schema_extra={"env": "N_MAX"})
    fock_cap: int = Field(4096, json_schema_extra={"env": "FOCK_CAP"})
    eig_symmetry_tol: float = Field(1e-12, json_schema_extra={"env": "EIG_SYMMETRY_TOL"})
    degeneracy_tol: float = Field(1e-10, json_schema_extra={"env": "DEGENERACY_TOL"})
    convergence_tol: float = Field(1e-8, json_schema_extra={"env": "CONVERGENCE_TOL"})
    coherent_tail_tol: float = Field(1e-12, json_schema_extra={"env": "COHERENT_TAIL_TOL"})
    dynamics_guard_levels: int = Field(10, json_schema_extra={"env": "DYNAMICS_GUARD_LEVELS"})
    dynamics_cutoff: int = Field(60, json_schema_extra={"env": "DYNAMICS_CUTOFF"})
    time_samples: int = Field(4096, json_schema_extra={"env": "TIME_SAMPLES"})


class RuntimeSettings(BaseSettings):
    """
    Runtime settings for the command line.

    Attributes:
        threads (int): Worker pool cap for parameter sweeps (``QRABI_THREADS``).
        log_level (str): Loguru level for the stderr sink.
        log_file (Optional[str]): Optional rotating log file.
    """

    model_config = SettingsConfigDict(env_file=".env", env_prefix="QRABI_", extra="ignore")
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, json_schema_extra={"env": "THREADS"})
    log_level: str = Field("ERROR", json_schema_extra={"env": "LOG_LEVEL"})
    log_file: Optional[str] = Field(None, json_schema_extra={"env": "LOG_FILE"})


class Settings:
    """
    Aggregated application settings.

    Attributes:
        solver (SolverSettings): Numerical defaults.
        runtime (RuntimeSettings): Command-line runtime settings.
    """

    def __init__(self):
        """Initialize settings by loading all individual configurations."""
        self.solver = SolverSettings()
        self.runtime = RuntimeSettings()

    @classmethod
    def load_settings(cls) -> "Settings":
        """
        Load settings from environment variables or default values.

        Returns:
            Settings: An instance of Settings with all configs loaded.
        """
        return cls()


settings = Settings()
