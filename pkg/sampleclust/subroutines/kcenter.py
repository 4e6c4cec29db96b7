"""k-center subroutines: farthest-point traversal and greedy disks with outliers."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist, pdist, squareform

from sampleclust.core.objective import objective_with_outliers
from sampleclust.core.types import CenterSet, Dataset, ObjectiveKind, as_points
from sampleclust.errors import InputError
from sampleclust.logging import get_logger
from sampleclust.subroutines.base import KCenterSolution


def gonzalez_kcenter(
    P: Dataset | np.ndarray,
    k: int,
    rng: np.random.Generator,
    first_index: int | None = None,
) -> KCenterSolution:
    """Farthest-point traversal (2-approximation for k-center).

    The first center is a uniformly random point; every next center is the point
    farthest from the centers chosen so far (lowest index on ties). Once all
    distinct locations are centers the traversal keeps picking zero-distance
    points, which pads the result with repeats.

    Args:
        P: Points.
        k: Number of centers, k >= 1.
        rng: Random source for the first center.
        first_index: Force the first center (used by deterministic tests).

    Returns:
        KCenterSolution with k centers and the covering radius over all points.
    """
    X = as_points(P)
    n = X.shape[0]
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")

    first = int(rng.integers(n)) if first_index is None else int(first_index)
    if not 0 <= first < n:
        raise InputError(f"first_index {first} out of range for n={n}")

    indices = [first]
    min_dist = cdist(X, X[first:first + 1]).ravel()
    for _ in range(1, k):
        nxt = int(np.argmax(min_dist))
        indices.append(nxt)
        np.minimum(min_dist, cdist(X, X[nxt:nxt + 1]).ravel(), out=min_dist)

    return KCenterSolution(
        centers=CenterSet.from_points(X, indices),
        radius=float(min_dist.max()),
        indices=indices,
    )


def _greedy_disks(
    D: np.ndarray,
    r: float,
    k: int,
    z: int,
) -> tuple[bool, list[int]]:
    """One round of the greedy disk procedure at radius r."""
    n = D.shape[0]
    ball = (D <= r).astype(np.float32)
    uncovered = np.ones(n, dtype=bool)
    chosen: list[int] = []
    for _ in range(k):
        counts = ball @ uncovered.astype(np.float32)
        best = int(np.argmax(counts))
        chosen.append(best)
        uncovered &= D[best] > 3.0 * r
    return int(uncovered.sum()) <= z, chosen


def charikar_kcenter_outliers(
    P: Dataset | np.ndarray,
    k: int,
    z: int,
) -> KCenterSolution:
    """Greedy-disk k-center with z outliers (3-approximation, centers from P).

    For a guessed radius r the procedure picks k times the point whose r-ball holds
    the most uncovered points and removes everything within 3r of it; the guess
    succeeds when at most z points stay uncovered. The smallest successful radius
    is binary-searched over the sorted pairwise distances.

    Args:
        P: Points (the sample S when used inside the framework).
        k: Number of centers, k >= 1.
        z: Number of outliers, 0 <= z < n.

    Returns:
        KCenterSolution whose radius is the max distance of the n - z retained
        inliers to the chosen centers.
    """
    X = as_points(P)
    n = X.shape[0]
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if z < 0 or z >= n:
        raise InputError(f"Outlier count must satisfy 0 <= z < n (n={n}), got z={z}")

    if k + z >= n:
        indices = [i % n for i in range(k)]
        return KCenterSolution(CenterSet.from_points(X, indices), 0.0, indices)

    logger = get_logger()
    D = squareform(pdist(X))
    radii = np.unique(D)

    # invariant: radii[hi] succeeds, radii[lo] fails (lo = -1 means "none tested")
    lo, hi = -1, len(radii) - 1
    _, best = _greedy_disks(D, float(radii[hi]), k, z)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        ok, chosen = _greedy_disks(D, float(radii[mid]), k, z)
        if ok:
            hi, best = mid, chosen
        else:
            lo = mid
    logger.debug("charikar radius search done", n=n, k=k, z=z, guess=float(radii[hi]))

    centers = CenterSet.from_points(X, best)
    radius = objective_with_outliers(X, centers, z, ObjectiveKind.CENTER)
    return KCenterSolution(centers=centers, radius=radius, indices=best)
