"""Small instances, brute-force oracles and random instance strategies for testing."""

from __future__ import annotations

import itertools
import math

import numpy as np
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.spatial.distance import cdist

from sampleclust.core.types import OUTLIER, Dataset, ObjectiveKind


def line(*coords: float, labels: list[int] | None = None, name: str = "line") -> Dataset:
    """Points on the real line."""
    return Dataset(
        points=np.asarray(coords, dtype=np.float64).reshape(-1, 1),
        labels=None if labels is None else np.asarray(labels, dtype=np.int64),
        name=name,
    )


def blobs(
    k: int = 3,
    per_cluster: int = 50,
    z: int = 5,
    dim: int = 2,
    spread: float = 1.0,
    gap: float = 100.0,
    seed: int = 0,
) -> Dataset:
    """k tight, well separated clusters plus z far outliers, labeled.

    Cluster j is centered at ``j * gap`` on every axis; outliers sit on a far
    diagonal, each at least ``10 * gap`` from every cluster.
    """
    rng = np.random.default_rng(seed)
    parts = []
    labels = []
    for j in range(k):
        parts.append(rng.normal(j * gap, spread, size=(per_cluster, dim)))
        labels.extend([j] * per_cluster)
    if z:
        far = (k + 10) * gap
        offsets = far + gap * np.arange(z, dtype=np.float64)
        parts.append(np.repeat(offsets[:, None], dim, axis=1) * np.where(np.arange(dim) % 2, -1.0, 1.0))
        labels.extend([OUTLIER] * z)
    return Dataset(points=np.vstack(parts), labels=np.asarray(labels, dtype=np.int64), name="blobs")


def brute_force_objective(points: np.ndarray, centers: np.ndarray, z: int, kind: ObjectiveKind) -> float:
    """Minimum over all (n - z)-subsets of the untrimmed objective (tiny n only).

    Sums are correctly rounded, so the value is exact for any subset order.
    """
    n = points.shape[0]
    dists = cdist(points, centers).min(axis=1)
    costs = dists * dists if kind is ObjectiveKind.MEANS else dists
    best = np.inf
    for kept in itertools.combinations(range(n), n - z):
        values = costs[list(kept)]
        value = float(values.max()) if kind is ObjectiveKind.CENTER else math.fsum(values.tolist()) / (n - z)
        best = min(best, value)
    return best


@st.composite
def clustering_instances(draw, max_n: int = 12, max_z: int = 3, max_dim: int = 3, max_k: int = 3):
    """Random (points, centers, z) with n <= max_n, z <= max_z, D <= max_dim, k <= max_k."""
    dim = draw(st.integers(1, max_dim))
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, max_k))
    z = draw(st.integers(0, min(max_z, n - 1)))
    coords = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
    points = draw(arrays(np.float64, (n, dim), elements=coords))
    centers = draw(arrays(np.float64, (k, dim), elements=coords))
    return points, centers, z
