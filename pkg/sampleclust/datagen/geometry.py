"""Cluster balls, diameters and rejection sampling outside the balls."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from sampleclust.config import DatagenSettings
from sampleclust.core.types import OUTLIER
from sampleclust.errors import DataGenerationError
from sampleclust.logging import get_logger

_DIAMETER_BLOCK = 2048


def cluster_ids(labels: np.ndarray) -> list[int]:
    """Sorted cluster codes, outliers excluded."""
    return [int(c) for c in np.unique(labels[labels != OUTLIER])]


def enclosing_balls(
    points: np.ndarray,
    labels: np.ndarray,
    centers: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-cluster ball (center, max member distance).

    Args:
        points: Points (n, D).
        labels: Cluster codes; outliers ignored.
        centers: Ball centers in cluster order; cluster centroids when omitted.

    Returns:
        Tuple of (centers (c, D), radii (c,)) in sorted cluster-code order.
    """
    ids = cluster_ids(labels)
    if centers is None:
        centers = np.vstack([points[labels == c].mean(axis=0) for c in ids])
    radii = np.array(
        [
            float(cdist(points[labels == c], centers[j:j + 1]).max())
            for j, c in enumerate(ids)
        ],
        dtype=np.float64,
    )
    return np.asarray(centers, dtype=np.float64), radii


def _block_diameter(members: np.ndarray) -> float:
    best = 0.0
    for start in range(0, members.shape[0], _DIAMETER_BLOCK):
        block = cdist(members[start:start + _DIAMETER_BLOCK], members[start:])
        best = max(best, float(block.max()))
    return best


def max_cluster_diameter(
    points: np.ndarray,
    labels: np.ndarray,
    max_pairs: int = 20_000_000,
) -> tuple[float, str]:
    """Largest intra-cluster diameter L.

    Exact pair scan when the total number of pairs is at most ``max_pairs``,
    otherwise the upper bound 2 * (max distance to the cluster centroid).

    Returns:
        Tuple of (L, method) with method ``"exact"`` or ``"radius_bound"``.
    """
    ids = cluster_ids(labels)
    sizes = [int((labels == c).sum()) for c in ids]
    pairs = sum(s * (s - 1) // 2 for s in sizes)
    if pairs <= max_pairs:
        diameter = max((_block_diameter(points[labels == c]) for c in ids), default=0.0)
        return diameter, "exact"
    _, radii = enclosing_balls(points, labels)
    return float(2.0 * radii.max()), "radius_bound"


def sample_outside_balls(
    count: int,
    centers: np.ndarray,
    radii: np.ndarray,
    low: np.ndarray,
    high: np.ndarray,
    rng: np.random.Generator,
    settings: DatagenSettings | None = None,
) -> np.ndarray:
    """Uniform points in the box [low, high] lying strictly outside every ball.

    The box is doubled around its middle whenever ``settings.max_attempts``
    draws do not yield enough points.

    Raises:
        DataGenerationError: After ``settings.max_enlargements`` enlargements.
    """
    settings = settings or DatagenSettings()
    dim = centers.shape[1]
    if count <= 0:
        return np.empty((0, dim), dtype=np.float64)

    logger = get_logger()
    mid = (np.asarray(low, dtype=np.float64) + np.asarray(high, dtype=np.float64)) / 2.0
    half = (np.asarray(high, dtype=np.float64) - np.asarray(low, dtype=np.float64)) / 2.0
    accepted: list[np.ndarray] = []
    have = 0
    for enlargement in range(settings.max_enlargements + 1):
        attempts = 0
        while attempts < settings.max_attempts:
            batch = int(min(max(2 * (count - have), 1024), settings.max_attempts - attempts))
            draws = rng.uniform(mid - half, mid + half, size=(batch, dim))
            attempts += batch
            outside = np.all(cdist(draws, centers) > radii[None, :], axis=1)
            good = draws[outside][: count - have]
            if good.shape[0]:
                accepted.append(good)
                have += good.shape[0]
            if have == count:
                return np.vstack(accepted)
        if enlargement < settings.max_enlargements:
            half = half * 2.0
            logger.warning(
                "outlier rejection sampling exhausted, enlarging box",
                enlargement=enlargement + 1,
                placed=have,
                requested=count,
            )
    raise DataGenerationError(
        f"Placed {have} of {count} points outside the cluster balls after "
        f"{settings.max_enlargements} box enlargements"
    )
