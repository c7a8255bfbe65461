"""Time grids, initial-state records and observable traces."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from qrabi.exceptions import DomainError


@dataclass(frozen=True)
class TimeGrid:
    """Ascending sample times in units of 1/omega."""

    times: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        if times.ndim != 1 or times.size == 0:
            raise DomainError("time grid must be a non-empty 1-d array")
        if np.any(np.diff(times) < 0):
            raise DomainError("time grid must be ascending")
        times.setflags(write=False)
        object.__setattr__(self, "times", times)

    @classmethod
    def uniform(cls, t_max: float, samples: int) -> "TimeGrid":
        if samples < 1 or t_max < 0:
            raise DomainError(f"invalid grid: t_max={t_max}, samples={samples}")
        return cls(np.linspace(0.0, t_max, samples))

    @classmethod
    def periods(cls, Omega: float, t_periods: float, samples: int) -> "TimeGrid":
        """Uniform grid covering Omega t / (2 pi) in [0, t_periods]."""
        if Omega <= 0:
            raise DomainError("a grid in qubit periods needs Omega > 0")
        return cls.uniform(2.0 * np.pi * t_periods / Omega, samples)

    def __len__(self) -> int:
        return self.times.shape[0]


@dataclass(frozen=True)
class InitialState:
    """|-1_z> x |alpha> in the original frame; |-1_z> x |alpha - lambda> after the displacement."""

    alpha: float
    lam: float = 0.0
    cutoff: int = 0
    tail: float = 0.0

    @property
    def displaced_alpha(self) -> float:
        return self.alpha - self.lam

    def as_dict(self) -> Dict[str, float]:
        return {"alpha": self.alpha, "lambda": self.lam, "cutoff": self.cutoff, "tail": self.tail}


@dataclass(frozen=True)
class TimeSeries:
    """Sampled <J_z>(t) and P_-1(t) for one method."""

    grid: TimeGrid
    jz: np.ndarray
    p_minus1: np.ndarray
    method: str
    initial_state: InitialState
    Omega: float
    norm: Optional[np.ndarray] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def times(self) -> np.ndarray:
        return self.grid.times

    @property
    def t_over_2pi_Omega(self) -> np.ndarray:
        return self.Omega * self.grid.times / (2.0 * np.pi)

    @property
    def norm_drift(self) -> float:
        if self.norm is None:
            return 0.0
        return float(np.max(np.abs(self.norm - self.norm[0])))
