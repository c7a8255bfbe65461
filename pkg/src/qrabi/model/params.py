from dataclasses import dataclass

import numpy as np

from qrabi.exceptions import DomainError


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of the two-qubit Rabi Hamiltonian.

    H = omega a^dagger a + Omega J_x + g J_z (a^dagger + a)
    """

    omega: float = 1.0
    Omega: float = 1.0
    g: float = 0.0

    def __post_init__(self):
        for name in ("omega", "Omega", "g"):
            if not np.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.omega <= 0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if self.Omega < 0:
            raise DomainError(f"Omega must be nonnegative, got {self.Omega}")
        if self.g < 0:
            raise DomainError(f"g must be nonnegative, got {self.g}")


@dataclass(frozen=True)
class FockTruncation:
    """Highest retained Fock level; the oscillator basis has n_max + 1 states."""

    n_max: int

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise DomainError(f"n_max must be an integer >= 1, got {self.n_max}")

    @property
    def fock_size(self) -> int:
        return self.n_max + 1

    @property
    def dimension(self) -> int:
        return 3 * (self.n_max + 1)

    def doubled(self) -> "FockTruncation":
        return FockTruncation(2 * self.n_max)
