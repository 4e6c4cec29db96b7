"""Shared types for the clustering subroutines."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from sampleclust.core.types import CenterSet
from sampleclust.errors import ConfigurationError


@dataclass
class IterConfig:
    """Iteration limits for Lloyd-style subroutines.

    Attributes:
        max_iters: Maximum assignment/update rounds.
        tol: Stop when the relative objective improvement falls below this.
        weiszfeld_tol: Convergence tolerance of the geometric-median update.
        weiszfeld_max_iters: Inner iteration cap of the geometric-median update.
        restrict_centers_to_input: Snap updated centers to their nearest input point.
    """

    max_iters: int = 100
    tol: float = 1e-6
    weiszfeld_tol: float = 1e-7
    weiszfeld_max_iters: int = 100
    restrict_centers_to_input: bool = False

    def __post_init__(self) -> None:
        if self.max_iters < 1:
            raise ConfigurationError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.tol < 0:
            raise ConfigurationError(f"tol must be >= 0, got {self.tol}")


@dataclass
class KCenterSolution:
    """Centers of a k-center solution and their covering radius.

    Attributes:
        centers: Chosen centers.
        radius: Max distance of covered points to their nearest center.
        indices: Input indices of the centers.
    """

    centers: CenterSet
    radius: float
    indices: list[int] = field(default_factory=list)


@dataclass
class IterationTrace:
    """Centers reached by an iterative subroutine and its objective sequence."""

    centers: CenterSet
    history: list[float] = field(default_factory=list)
    converged: bool = False

    @property
    def n_iter(self) -> int:
        """Number of assignment rounds performed."""
        return len(self.history)

    @property
    def final_objective(self) -> float:
        """Objective after the last round."""
        return self.history[-1] if self.history else float(np.nan)
