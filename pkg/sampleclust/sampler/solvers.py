"""Sample solvers: the classical subroutines wrapped for the sampling framework."""

from __future__ import annotations

from typing import Any

import numpy as np

from sampleclust.core.objective import objective_with_outliers
from sampleclust.core.types import Dataset, ObjectiveKind
from sampleclust.errors import ConfigurationError
from sampleclust.registry import solvers
from sampleclust.sampler.base import Solver, SolverOutput
from sampleclust.subroutines.base import IterationTrace, IterConfig
from sampleclust.subroutines.kcenter import charikar_kcenter_outliers, gonzalez_kcenter
from sampleclust.subroutines.kmeans import kmeanspp_seed, trimmed_lloyd_trace

_LLOYD_KINDS = frozenset({ObjectiveKind.MEDIAN, ObjectiveKind.MEANS})


def _best_seeded_trace(
    sample: Dataset,
    k: int,
    z: int,
    kind: ObjectiveKind,
    rng: np.random.Generator,
    iteration: IterConfig,
    kmeanspp_retries: int,
    n_init: int,
    local_trials: int | None,
) -> IterationTrace:
    """Trimmed Lloyd from ``n_init`` k-means++ seedings; the lowest final objective wins, the first on ties."""
    if n_init < 1:
        raise ConfigurationError(f"n_init must be >= 1, got {n_init}")
    best: IterationTrace | None = None
    for _ in range(n_init):
        init = kmeanspp_seed(sample, k, rng, max_retries=kmeanspp_retries, local_trials=local_trials)
        trace = trimmed_lloyd_trace(sample, k, z, init, iteration, kind)
        if best is None or trace.final_objective < best.final_objective:
            best = trace
    assert best is not None
    return best


def _trace_info(trace: IterationTrace, n_init: int) -> dict[str, Any]:
    return {
        "sample_objective": trace.final_objective,
        "iterations": trace.n_iter,
        "converged": trace.converged,
        "n_init": n_init,
    }


@solvers.register("gonzalez")
class GonzalezSolver(Solver):
    """Farthest-point traversal with k + k' centers."""

    name = "gonzalez"
    kinds = frozenset({ObjectiveKind.CENTER})
    handles_outliers = False

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
        sol = gonzalez_kcenter(sample, k, rng)
        return SolverOutput(sol.centers, {"sample_radius": sol.radius, "c": 2.0})


@solvers.register("charikar")
class CharikarSolver(Solver):
    """Greedy disks with z' sample outliers."""

    name = "charikar"
    kinds = frozenset({ObjectiveKind.CENTER})
    handles_outliers = True

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
        sol = charikar_kcenter_outliers(sample, k, z)
        return SolverOutput(sol.centers, {"sample_radius": sol.radius, "c": 3.0})


@solvers.register("kmeanspp_lloyd")
class KMeansPPLloydSolver(Solver):
    """Best of n_init k-means++ seedings followed by Lloyd iteration, k + k' centers."""

    name = "kmeanspp_lloyd"
    kinds = _LLOYD_KINDS
    handles_outliers = False

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
        trace = _best_seeded_trace(sample, k, 0, kind, rng, iteration, kmeanspp_retries, n_init, local_trials)
        return SolverOutput(trace.centers, _trace_info(trace, n_init))


@solvers.register("kmeans_minus_minus")
class KMeansMinusMinusSolver(Solver):
    """Best of n_init k-means++ seedings followed by trimmed Lloyd with z' sample outliers."""

    name = "kmeans_minus_minus"
    kinds = _LLOYD_KINDS
    handles_outliers = True

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
        trace = _best_seeded_trace(sample, k, z, kind, rng, iteration, kmeanspp_retries, n_init, local_trials)
        return SolverOutput(trace.centers, _trace_info(trace, n_init))


def default_solver(handles_outliers: bool, kind: ObjectiveKind) -> str:
    """Default solver name for a variant (outlier-handling or not) and kind."""
    if kind is ObjectiveKind.CENTER:
        return "charikar" if handles_outliers else "gonzalez"
    return "kmeans_minus_minus" if handles_outliers else "kmeanspp_lloyd"


def sample_objective(sample: Dataset, output: SolverOutput, z: int, kind: ObjectiveKind) -> float:
    """Trimmed objective of the solver's centers on the sample."""
    return objective_with_outliers(sample, output.centers, z, kind)
