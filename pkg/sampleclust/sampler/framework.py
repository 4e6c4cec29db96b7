"""Uniform-sampling framework: sample, solve on the sample, return the centers.

Variant I solves the sample with k + k' centers and no outliers; variant II solves
it with k centers and z' sample outliers. The caller evaluates the returned
centers against the full dataset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from sampleclust.core.types import CenterSet, Dataset, as_points
from sampleclust.errors import ConfigurationError, InputError
from sampleclust.logging import get_logger
from sampleclust.random import create_rng
from sampleclust.registry import get_solver
from sampleclust.sampler.params import FrameworkConfig, SampleBudget, Variant
from sampleclust.sampler.solvers import default_solver, sample_objective


def uniform_sample(P: Dataset | np.ndarray, m: int, rng: np.random.Generator) -> Dataset:
    """Draw m points i.i.d. uniformly with replacement; labels are carried along.

    Returns:
        The sample; ``sample.name`` is ``"<name>[sample]"``.
    """
    if m < 1:
        raise InputError(f"Sample size must be >= 1, got {m}")
    data = P if isinstance(P, Dataset) else Dataset(as_points(P))
    indices = rng.integers(0, data.n, size=m)
    return data.subset(indices, name=f"{data.name}[sample]")


@dataclass
class FrameworkResult:
    """Centers returned by one framework run plus run diagnostics.

    Attributes:
        centers: The center set H (k + k' or k centers).
        budget: Resolved |S| and extra budget.
        algorithm: 1-4, see :attr:`FrameworkConfig.algorithm`.
        solver: Name of the sample solver.
        warnings: Theory-mode precondition failures.
        timings: Seconds spent sampling and solving.
        sample_objective: Objective of H on the sample (z' trimmed for variant II).
        info: Solver diagnostics.
    """

    centers: CenterSet
    budget: SampleBudget
    algorithm: int
    solver: str
    warnings: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    sample_objective: float = float("nan")
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def num_centers(self) -> int:
        return len(self.centers)

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-friendly dictionary (centers omitted)."""
        return {
            "algorithm": self.algorithm,
            "solver": self.solver,
            "budget": self.budget.to_dict(),
            "num_centers": self.num_centers,
            "sample_objective": self.sample_objective,
            "warnings": list(self.warnings),
            "info": dict(self.info),
        }


def run_framework(
    P: Dataset | np.ndarray,
    cfg: FrameworkConfig,
    rng: np.random.Generator | int | None = None,
) -> FrameworkResult:
    """Run one of the four sampling algorithms.

    Args:
        P: Full dataset.
        cfg: Framework configuration (direct or theory mode).
        rng: Random source; defaults to ``cfg.seed``.

    Returns:
        FrameworkResult with the center set H.

    Raises:
        ConfigurationError: |S| above ``cfg.max_sample_size``, z' >= |S|, or a
            solver that does not match the variant or objective kind.
    """
    logger = get_logger()
    data = P if isinstance(P, Dataset) else Dataset(as_points(P))
    rng = create_rng(cfg.seed if rng is None else rng)

    budget, warnings = cfg.resolve_budget()
    for message in warnings:
        logger.warning(message, algorithm=cfg.algorithm)
    if budget.sample_size > cfg.max_sample_size:
        raise ConfigurationError(
            f"Sample size {budget.sample_size} exceeds max_sample_size={cfg.max_sample_size}"
        )

    handles_outliers = cfg.variant is Variant.II
    name = cfg.solver or default_solver(handles_outliers, cfg.kind)
    try:
        solver = get_solver(name)
    except KeyError as e:
        raise ConfigurationError(str(e.args[0])) from e
    solver.check(cfg.kind)
    if solver.handles_outliers != handles_outliers:
        raise ConfigurationError(f"Solver '{name}' does not fit variant {cfg.variant.value}")

    if handles_outliers:
        k_total, z_sample = cfg.k, budget.extra
        if z_sample >= budget.sample_size:
            raise ConfigurationError(
                f"Sample outlier budget z'={z_sample} must be below |S|={budget.sample_size}"
            )
    else:
        k_total, z_sample = cfg.k + budget.extra, 0

    timings: dict[str, float] = {}
    with logger.timed("sample", size=budget.sample_size) as t:
        sample = uniform_sample(data, budget.sample_size, rng)
    timings["sample"] = t["seconds"]

    with logger.timed("solve", solver=name, k=k_total, z=z_sample) as t:
        output = solver.solve(
            sample,
            k_total,
            z_sample,
            cfg.kind,
            rng,
            cfg.iteration,
            kmeanspp_retries=cfg.kmeanspp_retries,
            n_init=cfg.n_init,
            local_trials=cfg.local_trials,
        )
    timings["solve"] = t["seconds"]

    result = FrameworkResult(
        centers=output.centers,
        budget=budget,
        algorithm=cfg.algorithm,
        solver=name,
        warnings=warnings,
        timings=timings,
        sample_objective=sample_objective(sample, output, z_sample, cfg.kind),
        info=output.info,
    )
    logger.debug(
        "framework run finished",
        algorithm=cfg.algorithm,
        sample_size=budget.sample_size,
        extra=budget.extra,
        num_centers=result.num_centers,
    )
    return result
