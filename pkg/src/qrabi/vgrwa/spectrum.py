"""Sorted spectra of the displaced-frame approximations with level provenance."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from qrabi.exceptions import DomainError
from qrabi.model import ModelParams

from .adiabatic import AdiabaticBlock, adiabatic_blocks
from .blocks import Block0, GroundState, GrwaBlock, grwa_block0, grwa_blocks, ground_state
from .displacement import Displacement, LambdaStrategy


@dataclass(frozen=True)
class SpectrumLevel:
    """
    One energy level.

    Attributes:
        energy (float): Level energy.
        manifold (Optional[int]): Block index, None for the decoupled ground state.
        branch (int): 1-based ascending position inside the block, 0 for the ground state.
    """

    energy: float
    manifold: Optional[int]
    branch: int

    @property
    def label(self) -> str:
        if self.manifold is None:
            return "g"
        return f"{self.manifold}.{self.branch}"


@dataclass(frozen=True)
class SpectrumTable:
    """Levels in ascending energy plus the blocks they came from."""

    method: str
    disp: Displacement
    levels: Tuple[SpectrumLevel, ...]
    ground: Optional[GroundState] = None
    block0: Optional[Block0] = None
    blocks: Tuple[GrwaBlock, ...] = field(default_factory=tuple)
    adiabatic: Tuple[AdiabaticBlock, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def energies(self) -> np.ndarray:
        return np.array([level.energy for level in self.levels])

    def lowest(self, k: int) -> List[SpectrumLevel]:
        if k < 1 or k > len(self.levels):
            raise DomainError(f"requested {k} levels from a table of {len(self.levels)}")
        return list(self.levels[:k])

    def block(self, n: int) -> GrwaBlock:
        return self.blocks[n - 1]


def _sorted(levels: List[SpectrumLevel]) -> Tuple[SpectrumLevel, ...]:
    return tuple(
        sorted(levels, key=lambda level: (level.energy, -1 if level.manifold is None else level.manifold, level.branch))
    )


def method_tag(disp: Displacement) -> str:
    return "grwa" if disp.strategy is LambdaStrategy.GRWA_FIXED else "vgrwa"


def assemble_spectrum(params: ModelParams, disp: Displacement, n_blocks: int) -> SpectrumTable:
    """
    Union of E_G, the manifold-0 pair and the manifolds 1..n_blocks, sorted.

    Args:
        params (ModelParams): Model parameters.
        disp (Displacement): Displacement; GRWA when its strategy is GRWA_FIXED.
        n_blocks (int): Highest manifold index, >= 1.

    Returns:
        SpectrumTable: 1 + 2 + 3 n_blocks levels.
    """
    if n_blocks < 1:
        raise DomainError(f"n_blocks must be >= 1, got {n_blocks}")
    ground = ground_state(params, disp)
    block0 = grwa_block0(params, disp)
    blocks = grwa_blocks(params, disp, n_blocks)

    levels = [SpectrumLevel(ground.energy, None, 0)]
    levels += [SpectrumLevel(float(value), 0, j + 1) for j, value in enumerate(block0.values)]
    for block in blocks:
        levels += [SpectrumLevel(float(value), block.n, j + 1) for j, value in enumerate(block.values)]

    return SpectrumTable(
        method=method_tag(disp),
        disp=disp,
        levels=_sorted(levels),
        ground=ground,
        block0=block0,
        blocks=tuple(blocks),
    )


def assemble_adiabatic_spectrum(params: ModelParams, disp: Displacement, n_blocks: int) -> SpectrumTable:
    """All three eigenvalues of the adiabatic blocks n = 0..n_blocks, sorted."""
    if n_blocks < 0:
        raise DomainError(f"n_blocks must be >= 0, got {n_blocks}")
    blocks = adiabatic_blocks(params, disp, n_blocks)
    levels = [SpectrumLevel(float(value), block.n, j + 1) for block in blocks for j, value in enumerate(block.values)]
    return SpectrumTable(method="adiabatic", disp=disp, levels=_sorted(levels), adiabatic=tuple(blocks))
