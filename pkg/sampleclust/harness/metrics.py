"""Evaluation metrics: outlier precision, cluster purity, normalized objectives."""

from __future__ import annotations

import sys
from typing import TYPE_CHECKING, Sequence

import numpy as np
from sklearn.metrics.cluster import contingency_matrix

from sampleclust.core.types import OUTLIER, ClusteringResult, Dataset
from sampleclust.datagen.synthetic import GroundTruth
from sampleclust.errors import InputError

if TYPE_CHECKING:
    from sampleclust.harness.report import EvalReport

Truth = GroundTruth | Dataset | np.ndarray


def truth_labels(truth: Truth) -> np.ndarray:
    """Ground-truth label codes from a GroundTruth, labeled Dataset or array."""
    if isinstance(truth, GroundTruth):
        return truth.labels
    if isinstance(truth, Dataset):
        return truth.require_labels()
    return np.asarray(truth, dtype=np.int64)


def _memberships(result: ClusteringResult | np.ndarray) -> np.ndarray:
    if isinstance(result, ClusteringResult):
        return result.memberships
    return np.asarray(result, dtype=np.int64)


def precision(result: ClusteringResult | np.ndarray, truth: Truth) -> float | None:
    """Share of ground-truth outliers among the returned outliers' points.

    Returns:
        |Out & Out_truth| / |Out_truth|, or None when there are no truth outliers.
    """
    memberships = _memberships(result)
    labels = truth_labels(truth)
    if memberships.shape != labels.shape:
        raise InputError(f"memberships {memberships.shape} and labels {labels.shape} differ in length")
    truth_out = labels == OUTLIER
    total = int(truth_out.sum())
    if total == 0:
        return None
    found = int((truth_out & (memberships == OUTLIER)).sum())
    return found / total


def purity(
    result: ClusteringResult | np.ndarray,
    truth: Truth,
    n: int | None = None,
    z: int | None = None,
) -> float:
    """Max-overlap purity over the returned inliers.

    sum over obtained clusters of the largest overlap with a ground-truth cluster,
    divided by n - z. Returned outliers are left out on both sides and truth
    outliers never count as a matching cluster.
    """
    memberships = _memberships(result)
    labels = truth_labels(truth)
    if memberships.shape != labels.shape:
        raise InputError(f"memberships {memberships.shape} and labels {labels.shape} differ in length")
    n = int(memberships.shape[0]) if n is None else int(n)
    z = int((memberships == OUTLIER).sum()) if z is None else int(z)
    if n - z <= 0:
        raise InputError(f"purity needs n - z > 0, got n={n}, z={z}")

    inliers = memberships != OUTLIER
    if not inliers.any():
        return 0.0
    true_in = labels[inliers]
    table = contingency_matrix(true_in, memberships[inliers])
    classes = np.unique(true_in)
    table[classes == OUTLIER, :] = 0
    return float(np.amax(table, axis=0).sum()) / (n - z)


def normalize_values(values: Sequence[float]) -> tuple[list[float], bool]:
    """Divide by the group minimum; a zero minimum is replaced by machine epsilon.

    Returns:
        Tuple of (normalized values, whether the epsilon floor was used).
    """
    if not values:
        return [], False
    low = min(values)
    flagged = low <= 0.0
    denom = max(low, sys.float_info.epsilon)
    return [v / denom for v in values], flagged


def normalize_group(reports: Sequence["EvalReport"]) -> list["EvalReport"]:
    """Fill ``normalized_objective`` of reports sharing instance and objective kind.

    Failed reports are skipped.
    """
    ok = [r for r in reports if r.status == "ok" and r.objective is not None]
    keys = {(r.instance, r.kind) for r in ok}
    if len(keys) > 1:
        raise InputError(f"normalize_group expects one (instance, kind) group, got {sorted(keys)}")
    normalized, flagged = normalize_values([float(r.objective) for r in ok])  # type: ignore[arg-type]
    for report, value in zip(ok, normalized):
        report.normalized_objective = value
        report.normalization_flag = flagged
    return list(reports)
