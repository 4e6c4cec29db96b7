"""Probability boosting: m independent framework runs, then one-pass selection."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from sampleclust.core.objective import DEFAULT_CHUNK_SIZE
from sampleclust.core.types import ClusteringResult, Dataset, as_points
from sampleclust.errors import InputError
from sampleclust.logging import get_logger
from sampleclust.random import DeterministicRNG
from sampleclust.sampler.framework import FrameworkResult, run_framework
from sampleclust.sampler.params import FrameworkConfig
from sampleclust.selector.onepass import DEFAULT_MEMBERSHIP_CAP, CandidateSet, one_pass_select


@dataclass
class BoostReport:
    """Per-run and selection diagnostics of a boosted run."""

    base_seed: int
    run_seeds: list[int]
    run_timings: list[dict[str, float]]
    candidate_objectives: list[float]
    best_index: int
    select_seconds: float
    points_read: int
    rescanned: bool
    budget: dict[str, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def m(self) -> int:
        """Number of runs."""
        return len(self.run_seeds)

    def timings(self) -> dict[str, float]:
        """Summed sample/solve seconds and the selection scan time."""
        return {
            "sample": sum(t.get("sample", 0.0) for t in self.run_timings),
            "solve": sum(t.get("solve", 0.0) for t in self.run_timings),
            "select": self.select_seconds,
        }

    def to_dict(self, include_timings: bool = True) -> dict[str, Any]:
        """Convert to dictionary; timings are optional so records stay reproducible."""
        data: dict[str, Any] = {
            "m": self.m,
            "base_seed": self.base_seed,
            "run_seeds": list(self.run_seeds),
            "candidate_objectives": list(self.candidate_objectives),
            "best_index": self.best_index,
            "points_read": self.points_read,
            "rescanned": self.rescanned,
            "budget": dict(self.budget),
            "warnings": list(self.warnings),
        }
        if include_timings:
            data["timings"] = self.timings()
            data["run_timings"] = [dict(t) for t in self.run_timings]
        return data


def boosted_run(
    P: Dataset | np.ndarray,
    cfg: FrameworkConfig,
    m: int,
    rng: np.random.Generator | int | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    membership_cap: int = DEFAULT_MEMBERSHIP_CAP,
) -> tuple[ClusteringResult, BoostReport]:
    """Run the framework m times and keep the best candidate on the full data.

    Run ``i`` uses the seed ``DeterministicRNG(base_seed).derive_seed("run", i)``, where the base
    seed is ``rng`` itself (int), one draw from it (Generator) or ``cfg.seed``.

    Args:
        P: Full dataset.
        cfg: Framework configuration.
        m: Number of independent runs, m >= 1.
        rng: Seed or random source.
        chunk_size: Points per block of the selection pass.
        membership_cap: Largest n x m membership buffer of the selection pass.

    Returns:
        The winner's ClusteringResult and a BoostReport.
    """
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    logger = get_logger()
    data = P if isinstance(P, Dataset) else Dataset(as_points(P))

    if isinstance(rng, np.random.Generator):
        base_seed = int(rng.integers(0, 2**32))
    elif rng is None:
        base_seed = int(cfg.seed)
    else:
        base_seed = int(rng)

    streams = DeterministicRNG(base_seed)
    seeds = [streams.derive_seed("run", i) for i in range(m)]
    runs: list[FrameworkResult] = [run_framework(data, cfg, streams.child("run", i)) for i in range(m)]

    cands = CandidateSet(
        [r.centers for r in runs],
        [{"run": i, "seed": s} for i, s in enumerate(seeds)],
    )
    with logger.timed("select", candidates=m, n=data.n) as t:
        selection = one_pass_select(data, cands, cfg.z, cfg.kind, chunk_size, membership_cap)

    result = selection.result
    result.metadata.update({"algorithm": cfg.algorithm, "solver": runs[0].solver})
    report = BoostReport(
        base_seed=base_seed,
        run_seeds=seeds,
        run_timings=[r.timings for r in runs],
        candidate_objectives=selection.objectives,
        best_index=selection.best_index,
        select_seconds=t["seconds"],
        points_read=selection.points_read,
        rescanned=selection.rescanned,
        budget=runs[0].budget.to_dict(),
        warnings=list(runs[0].warnings),
    )
    logger.info(
        "boosted run finished",
        algorithm=cfg.algorithm,
        m=m,
        best=selection.best_index,
        objective=result.objective,
    )
    return result, report
