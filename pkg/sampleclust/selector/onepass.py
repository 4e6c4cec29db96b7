"""Best-candidate selection in a single pass over the full dataset."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from sampleclust.core.objective import DEFAULT_CHUNK_SIZE, nearest_centers, point_costs
from sampleclust.core.types import OUTLIER, CenterSet, ClusteringResult, Dataset, ObjectiveKind, as_points
from sampleclust.errors import InputError
from sampleclust.logging import get_logger
from sampleclust.selector.accumulators import ExactSum, TopCosts

DEFAULT_MEMBERSHIP_CAP = 50_000_000


@dataclass
class CandidateSet:
    """Candidate center sets H_1..H_m with per-candidate provenance."""

    candidates: list[CenterSet]
    provenance: list[dict[str, Any]] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.candidates = [c if isinstance(c, CenterSet) else CenterSet(c) for c in self.candidates]
        if not self.candidates:
            raise InputError("Candidate list is empty")
        dim = self.candidates[0].dim
        for c in self.candidates[1:]:
            c.check_dim(dim)
        if not self.provenance:
            self.provenance = [{} for _ in self.candidates]
        if len(self.provenance) != len(self.candidates):
            raise InputError("provenance must have one entry per candidate")

    @property
    def dim(self) -> int:
        return self.candidates[0].dim

    def __len__(self) -> int:
        return len(self.candidates)

    def __getitem__(self, i: int) -> CenterSet:
        return self.candidates[i]


@dataclass
class Selection:
    """Outcome of :func:`one_pass_select`.

    Attributes:
        best_index: Winning candidate (lowest index on ties).
        result: Memberships and objective of the winner on the full dataset.
        objectives: Trimmed objective of every candidate.
        points_read: Points read by the selection pass.
        rescanned: Whether memberships needed a second pass (memory-bounded mode).
    """

    best_index: int
    result: ClusteringResult
    objectives: list[float]
    points_read: int
    rescanned: bool = False


class _CandidateState:
    """Per-candidate trimmed aggregate."""

    def __init__(self, z: int, kind: ObjectiveKind) -> None:
        self.kind = kind
        self.z = z
        self.top = TopCosts(z + 1)
        self.total = ExactSum() if kind is not ObjectiveKind.CENTER else None

    def update(self, costs: np.ndarray, indices: np.ndarray) -> None:
        self.top.push(costs, indices)
        if self.total is not None:
            self.total.add(costs)

    def objective(self, n: int) -> float:
        if self.kind is ObjectiveKind.CENTER:
            return self.top.smallest_kept()
        assert self.total is not None
        dropped, _ = self.top.largest(self.z)
        return self.total.total_minus(dropped) / (n - self.z)

    def outliers(self) -> np.ndarray:
        _, idx = self.top.largest(self.z)
        return idx


def one_pass_select(
    P: Dataset | np.ndarray,
    cands: CandidateSet | Sequence[CenterSet],
    z: int,
    kind: ObjectiveKind | str,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    membership_cap: int = DEFAULT_MEMBERSHIP_CAP,
) -> Selection:
    """Evaluate all candidates in one scan and return the best with its memberships.

    For every candidate the scan keeps the z + 1 largest (cost, index) pairs and,
    for MEDIAN/MEANS, an exact running sum; each trimmed objective then equals
    :func:`~sampleclust.core.objective.objective_with_outliers` bitwise. Nearest-center
    indices of all candidates are buffered (n x m) unless that exceeds
    ``membership_cap`` cells, in which case the winner's memberships are recovered
    by one more scan.

    Args:
        P: Full dataset.
        cands: Candidate center sets.
        z: Number of outliers, 0 <= z < n.
        kind: Objective kind.
        chunk_size: Points per block.
        membership_cap: Largest n x m membership buffer.

    Returns:
        Selection with the winner and all candidate objectives.

    Raises:
        InputError: Empty candidate list, z >= n or dimension mismatch.
    """
    logger = get_logger()
    kind = ObjectiveKind.parse(kind)
    if not isinstance(cands, CandidateSet):
        cands = CandidateSet(list(cands))
    X = as_points(P)
    n = X.shape[0]
    if z < 0 or z >= n:
        raise InputError(f"Outlier count must satisfy 0 <= z < n (n={n}), got z={z}")
    cands[0].check_dim(X.shape[1])

    m = len(cands)
    buffered = n * m <= membership_cap
    memberships = np.empty((n, m), dtype=np.int32) if buffered else None
    states = [_CandidateState(z, kind) for _ in range(m)]

    points_read = 0
    step = max(1, int(chunk_size))
    for start in range(0, n, step):
        block = X[start:start + step]
        points_read += block.shape[0]
        indices = np.arange(start, start + block.shape[0], dtype=np.int64)
        for j, state in enumerate(states):
            dists, idx = nearest_centers(block, cands[j], chunk_size=step)
            state.update(point_costs(dists, kind), indices)
            if memberships is not None:
                memberships[start:start + block.shape[0], j] = idx

    objectives = [state.objective(n) for state in states]
    # argmin keeps the first (lowest) index on ties
    best = int(np.argmin(np.asarray(objectives)))

    if memberships is not None:
        labels = memberships[:, best].astype(np.int64)
    else:
        logger.warning(
            "membership buffer exceeds cap, re-scanning for the winner",
            cells=n * m,
            cap=membership_cap,
        )
        _, labels = nearest_centers(X, cands[best], chunk_size=step)
    labels[states[best].outliers()] = OUTLIER

    result = ClusteringResult(
        centers=cands[best],
        memberships=labels,
        outlier_count=z,
        objective=objectives[best],
        kind=kind,
        metadata={"best_index": best, **cands.provenance[best]},
    )
    logger.debug("one-pass selection done", candidates=m, best=best, objective=objectives[best])
    return Selection(
        best_index=best,
        result=result,
        objectives=objectives,
        points_read=points_read,
        rescanned=not buffered,
    )
