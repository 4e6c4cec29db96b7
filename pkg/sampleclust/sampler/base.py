"""Base class for the solvers run on the sample."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar

import numpy as np

from sampleclust.core.types import CenterSet, Dataset, ObjectiveKind
from sampleclust.errors import ConfigurationError
from sampleclust.subroutines.base import IterConfig


@dataclass
class SolverOutput:
    """Centers found on the sample plus solver diagnostics."""

    centers: CenterSet
    info: dict[str, Any] = field(default_factory=dict)


class Solver(ABC):
    """A clustering subroutine applied to the uniform sample.

    Solvers that handle outliers serve variant II (k centers, z' sample outliers);
    the others serve variant I (k + k' centers, no outliers).
    """

    name: ClassVar[str] = "base"
    kinds: ClassVar[frozenset[ObjectiveKind]] = frozenset()
    handles_outliers: ClassVar[bool] = False

    def check(self, kind: ObjectiveKind) -> None:
        """Raise if the solver cannot optimize ``kind``."""
        if kind not in self.kinds:
            supported = ", ".join(sorted(k.value for k in self.kinds))
            raise ConfigurationError(f"Solver '{self.name}' supports {supported}, not {kind.value}")

    @abstractmethod
    def solve(
        self,
        sample: Dataset,
        k: int,
        z: int,
        kind: ObjectiveKind,
        rng: np.random.Generator,
        iteration: IterConfig,
        kmeanspp_retries: int = 10,
        n_init: int = 1,
        local_trials: int | None = 1,
    ) -> SolverOutput:
        """Cluster the sample.

        Args:
            sample: The uniform sample S.
            k: Number of centers to return (k + k' for variant I).
            z: Sample outliers to discard (z' for variant II, 0 otherwise).
            kind: Objective kind.
            rng: Random source.
            iteration: Lloyd-style iteration limits.
            kmeanspp_retries: Duplicate-resampling cap of the seeding step.
            n_init: Seedings tried by the Lloyd-style solvers; the lowest sample
                objective wins.
            local_trials: D^2 candidates per seeding step (greedy k-means++);
                ``None`` means 2 + ln k.
        """
