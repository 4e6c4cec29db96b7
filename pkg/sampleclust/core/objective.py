"""Distances, outlier-trimmed objectives and membership assignment.

Trimming rule: per-point costs are ordered by (cost, point index) and the last z
entries are discarded, so among equal costs the higher index goes first. Discarding
the z largest costs is optimal for the max, sum and sum-of-squares aggregates.

MEDIAN/MEANS sums are correctly rounded (``math.fsum``), which makes the result
independent of summation order.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np
from scipy.spatial.distance import cdist

from sampleclust.core.types import (
    OUTLIER,
    CenterSet,
    ClusteringResult,
    Dataset,
    ObjectiveKind,
    as_points,
)
from sampleclust.errors import InputError

DEFAULT_CHUNK_SIZE = 65_536


def _centers_array(H: CenterSet | np.ndarray | Any) -> np.ndarray:
    return as_points(H, name="centers")


def dist_to_set(p: Any, H: CenterSet | np.ndarray) -> tuple[float, int]:
    """Distance from a point to its nearest center and that center's index.

    Args:
        p: Point coordinates (length D).
        H: Center set.

    Returns:
        Tuple of (distance, center index); lowest index on ties.
    """
    point = np.asarray(p, dtype=np.float64).reshape(1, -1)
    dists, idx = nearest_centers(point, _centers_array(H))
    return float(dists[0]), int(idx[0])


def nearest_centers(
    points: Dataset | np.ndarray,
    centers: CenterSet | np.ndarray,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> tuple[np.ndarray, np.ndarray]:
    """Nearest-center distances and indices for every point.

    Args:
        points: Points of shape (n, D).
        centers: Centers of shape (m, D).
        chunk_size: Rows per distance block.

    Returns:
        Tuple of (distances (n,), indices (n,)); lowest center index on ties.

    Raises:
        InputError: On dimension mismatch.
    """
    X = as_points(points)
    C = _centers_array(centers)
    if X.shape[1] != C.shape[1]:
        raise InputError(f"Dimension mismatch: points are in R^{X.shape[1]}, centers in R^{C.shape[1]}")

    n = X.shape[0]
    dists = np.empty(n, dtype=np.float64)
    idx = np.empty(n, dtype=np.int64)
    step = max(1, int(chunk_size))
    for start in range(0, n, step):
        block = cdist(X[start:start + step], C)
        # argmin returns the first minimum
        arg = np.argmin(block, axis=1)
        idx[start:start + step] = arg
        dists[start:start + step] = block[np.arange(block.shape[0]), arg]
    return dists, idx


def point_costs(dists: np.ndarray, kind: ObjectiveKind) -> np.ndarray:
    """Per-point costs: distance, or squared distance for MEANS."""
    return dists * dists if kind.squared else dists


def _check_z(n: int, z: int) -> int:
    z = int(z)
    if z < 0 or z >= n:
        raise InputError(f"Outlier count must satisfy 0 <= z < n (n={n}), got z={z}")
    return z


def trim_order(costs: np.ndarray, z: int) -> np.ndarray:
    """Indices of the z discarded points (largest cost, then highest index)."""
    n = costs.shape[0]
    z = _check_z(n, z)
    if z == 0:
        return np.empty(0, dtype=np.int64)
    order = np.lexsort((np.arange(n), costs))
    return np.sort(order[n - z:])


def exact_sum(values: np.ndarray) -> float:
    """Correctly rounded sum of a float array."""
    return math.fsum(np.asarray(values, dtype=np.float64).ravel().tolist())


def trimmed_aggregate(costs: np.ndarray, z: int, kind: ObjectiveKind) -> float:
    """Aggregate per-point costs after discarding the z largest.

    CENTER: max of the remainder. MEDIAN/MEANS: sum of the remainder / (n - z).
    """
    n = costs.shape[0]
    z = _check_z(n, z)
    keep = n - z
    if kind is ObjectiveKind.CENTER:
        if z == 0:
            return float(costs.max())
        return float(np.partition(costs, keep - 1)[keep - 1])
    kept = costs if z == 0 else np.partition(costs, keep - 1)[:keep]
    return exact_sum(kept) / keep


def objective_with_outliers(
    P: Dataset | np.ndarray,
    H: CenterSet | np.ndarray,
    z: int,
    kind: ObjectiveKind | str,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> float:
    """Outlier-trimmed k-center / k-median / k-means objective.

    Args:
        P: Dataset (n points).
        H: Center set.
        z: Number of outliers to discard, 0 <= z < n.
        kind: Objective kind.

    Returns:
        Trimmed objective value.

    Raises:
        InputError: If z >= n or dimensions differ.
    """
    kind = ObjectiveKind.parse(kind)
    X = as_points(P)
    _check_z(X.shape[0], z)
    dists, _ = nearest_centers(X, H, chunk_size)
    return trimmed_aggregate(point_costs(dists, kind), z, kind)


def cost(X: Dataset | np.ndarray, Y: CenterSet | np.ndarray) -> float:
    """Sum over points of the squared distance to the nearest center."""
    dists, _ = nearest_centers(X, Y)
    return exact_sum(dists * dists)


def assign_memberships(
    P: Dataset | np.ndarray,
    H: CenterSet | np.ndarray,
    z: int,
    kind: ObjectiveKind | str,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> ClusteringResult:
    """Assign points to nearest centers and mark the z costliest as outliers.

    Args:
        P: Dataset (n points).
        H: Center set.
        z: Number of outliers, 0 <= z < n.
        kind: Objective kind.

    Returns:
        ClusteringResult whose objective equals :func:`objective_with_outliers`.
    """
    kind = ObjectiveKind.parse(kind)
    X = as_points(P)
    z = _check_z(X.shape[0], z)
    centers = H if isinstance(H, CenterSet) else CenterSet(H)
    dists, idx = nearest_centers(X, centers, chunk_size)
    costs = point_costs(dists, kind)

    memberships = idx.copy()
    memberships[trim_order(costs, z)] = OUTLIER
    return ClusteringResult(
        centers=centers,
        memberships=memberships,
        outlier_count=z,
        objective=trimmed_aggregate(costs, z, kind),
        kind=kind,
    )
