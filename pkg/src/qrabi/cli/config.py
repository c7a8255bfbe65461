"""
Resolved command-line configurations.

Values come from three layers: solver settings defaults, an optional flat
``key = value`` config file, and command-line flags, later layers winning.
The merged mapping is validated by the pydantic models below.
"""

from qrabi._compat import StrEnum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from qrabi.config import settings
from qrabi.exceptions import ConfigError
from qrabi.model import ModelParams
from qrabi.vgrwa import LambdaStrategy


class Method(StrEnum):
    ED = "ed"
    VGRWA = "vgrwa"
    GRWA = "grwa"
    ADIABATIC = "adiabatic"


class OutputFormat(StrEnum):
    CSV = "csv"
    JSON = "json"


def _split_methods(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class _CommandConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    omega: float = Field(1.0, gt=0)
    methods: List[Method] = Field(default_factory=lambda: [Method.ED, Method.VGRWA, Method.GRWA])
    lambda_strategy: LambdaStrategy = LambdaStrategy.CLOSED_FORM
    n_max: int = Field(default_factory=lambda: settings.solver.n_max, ge=1)
    format: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None

    @field_validator("methods", mode="before")
    @classmethod
    def parse_methods(cls, value):
        return _split_methods(value)

    @field_validator("methods")
    @classmethod
    def unique_methods(cls, value: List[Method]) -> List[Method]:
        if not value:
            raise ValueError("at least one method is required")
        return sorted(set(value), key=list(Method).index)


class SweepConfig(_CommandConfig):
    """
    Static sweep over g or Omega.

    Exactly one of the g range and the Omega range varies; the other
    parameter is fixed. With no range at all the sweep is the single point
    (g, Omega), reported as a g sweep.
    """

    Omega: Optional[float] = Field(None, ge=0)
    g: Optional[float] = Field(None, ge=0)
    g_min: Optional[float] = Field(None, ge=0)
    g_max: Optional[float] = Field(None, ge=0)
    g_steps: int = Field(101, ge=1)
    Omega_min: Optional[float] = Field(None, ge=0)
    Omega_max: Optional[float] = Field(None, ge=0)
    Omega_steps: int = Field(101, ge=1)
    levels: int = Field(7, ge=1)
    n_blocks: Optional[int] = Field(None, ge=1)
    diagnostics: bool = False

    @model_validator(mode="after")
    def one_varying_parameter(self) -> "SweepConfig":
        g_range = self.g_min is not None or self.g_max is not None
        omega_range = self.Omega_min is not None or self.Omega_max is not None
        if g_range and omega_range:
            raise ValueError("only one of the g range and the Omega range may vary")
        if g_range:
            if self.g_min is None or self.g_max is None or self.g_min > self.g_max:
                raise ValueError("a g range needs g_min <= g_max")
            if self.Omega is None:
                raise ValueError("a g sweep needs a fixed Omega")
        elif omega_range:
            if self.Omega_min is None or self.Omega_max is None or self.Omega_min > self.Omega_max:
                raise ValueError("an Omega range needs Omega_min <= Omega_max")
            if self.g is None:
                raise ValueError("an Omega sweep needs a fixed g")
        elif self.g is None or self.Omega is None:
            raise ValueError("a single-point run needs both g and Omega")
        if self.levels > 3 * (self.n_max + 1):
            raise ValueError(f"levels={self.levels} exceeds the ED dimension {3 * (self.n_max + 1)}")
        return self

    @property
    def sweep_param(self) -> str:
        return "Omega" if self.Omega_min is not None else "g"

    @property
    def sweep_values(self) -> List[float]:
        if self.g_min is not None:
            return np.linspace(self.g_min, self.g_max, self.g_steps).tolist()
        if self.Omega_min is not None:
            return np.linspace(self.Omega_min, self.Omega_max, self.Omega_steps).tolist()
        return [self.g]

    @property
    def blocks(self) -> int:
        """Manifolds solved per point; enough for the requested levels."""
        return self.n_blocks or max(10, self.levels)

    def params_at(self, value: float) -> ModelParams:
        if self.sweep_param == "Omega":
            return ModelParams(omega=self.omega, Omega=value, g=self.g)
        return ModelParams(omega=self.omega, Omega=self.Omega, g=value)


class DynamicsConfig(_CommandConfig):
    """Time traces from |-1_z> x |alpha> over t_periods qubit periods."""

    Omega: float = Field(..., gt=0)
    g: float = Field(..., ge=0)
    alpha: float = Field(2.0, ge=0)
    t_periods: float = Field(100.0, gt=0)
    samples: int = Field(default_factory=lambda: settings.solver.time_samples, ge=1)
    cutoff: Optional[int] = Field(None, ge=1)

    @field_validator("methods")
    @classmethod
    def no_adiabatic_dynamics(cls, value: List[Method]) -> List[Method]:
        if Method.ADIABATIC in value:
            raise ValueError("dynamics is not available for the adiabatic method")
        return value

    @property
    def params(self) -> ModelParams:
        return ModelParams(omega=self.omega, Omega=self.Omega, g=self.g)


def load_config_file(path: Optional[str]) -> Dict[str, str]:
    """
    Read a flat ``key = value`` file; keys may use dashes or underscores.

    Raises:
        ConfigError: If the file does not exist.
    """
    if path is None:
        return {}
    if not Path(path).is_file():
        raise ConfigError(f"config file not found: {path}")
    values = dotenv_values(path)
    return {key.strip().replace("-", "_"): value for key, value in values.items() if value is not None}


def resolve_config(model: type, file_values: Mapping[str, Any], flags: Mapping[str, Any]):
    """
    Merge config-file values and flags (flags win) into a validated model.

    Raises:
        ConfigError: On any validation failure.
    """
    merged = {**file_values, **{key: value for key, value in flags.items() if value is not None}}
    try:
        return model.model_validate(merged)
    except ValidationError as e:
        raise ConfigError(str(e)) from e
