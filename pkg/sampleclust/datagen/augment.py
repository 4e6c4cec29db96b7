"""Real-data preparation: tiny-cluster relabeling, outlier augmentation, significance audit."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from sampleclust.config import DatagenSettings
from sampleclust.core.types import OUTLIER, Dataset
from sampleclust.datagen.geometry import cluster_ids, enclosing_balls, sample_outside_balls
from sampleclust.errors import InputError
from sampleclust.logging import get_logger
from sampleclust.sampler.params import SignificanceParams


def relabel_tiny_clusters(data: Dataset, threshold: float = 0.01) -> Dataset:
    """Mark every cluster holding fewer than ``threshold * n`` points as OUTLIER."""
    labels = data.require_labels().copy()
    tiny = [c for c in cluster_ids(labels) if (labels == c).sum() < threshold * data.n]
    if tiny:
        labels[np.isin(labels, tiny)] = OUTLIER
        get_logger().info(
            "relabeled tiny clusters as outliers", clusters=len(tiny), points=int((labels == OUTLIER).sum())
        )
    return Dataset(points=data.points, labels=labels, name=data.name, label_names=data.label_names)


def augmentation_count(n: int, outliers: int, fraction: float) -> int:
    """Points to append so outliers make up at least ``fraction`` of the result."""
    if not 0.0 <= fraction < 1.0:
        raise InputError(f"fraction must lie in [0, 1), got {fraction}")
    return max(0, math.ceil((fraction * n - outliers) / (1.0 - fraction) - 1e-9))


def augment_outliers(
    data: Dataset,
    fraction: float,
    rng: np.random.Generator,
    settings: DatagenSettings | None = None,
) -> Dataset:
    """Append uniform outliers outside every labeled cluster's enclosing ball.

    Balls are (centroid, max member distance). Candidates are drawn in the data's
    bounding box inflated ``box_inflation`` times around its middle.

    Args:
        data: Labeled dataset.
        fraction: Target outlier fraction of the final dataset.
        rng: Random source.
        settings: Rejection-sampling settings.

    Returns:
        The augmented dataset (``data`` itself when nothing is appended).
    """
    settings = settings or DatagenSettings()
    labels = data.require_labels()
    count = augmentation_count(data.n, int((labels == OUTLIER).sum()), fraction)
    if count == 0:
        return data
    if not cluster_ids(labels):
        raise InputError("augment_outliers needs at least one labeled cluster")

    centers, radii = enclosing_balls(data.points, labels)
    low = data.points.min(axis=0)
    high = data.points.max(axis=0)
    mid = (low + high) / 2.0
    half = np.maximum((high - low) / 2.0, max(float(radii.max()), 1.0)) * settings.box_inflation
    extra = sample_outside_balls(count, centers, radii, mid - half, mid + half, rng, settings)

    get_logger().info("appended outliers", count=count, fraction=fraction, n=data.n + count)
    return Dataset(
        points=np.vstack([data.points, extra]),
        labels=np.concatenate([labels, np.full(count, OUTLIER, dtype=np.int64)]),
        name=data.name,
        label_names=data.label_names,
    )


@dataclass
class SignificanceAudit:
    """Realized significance of a labeled instance.

    ``epsilon1 = k * min_cluster_size / n`` and ``epsilon2 = k * z / n``.
    """

    n: int
    k: int
    z: int
    cluster_sizes: list[int]

    @property
    def min_cluster_size(self) -> int:
        return min(self.cluster_sizes) if self.cluster_sizes else 0

    @property
    def epsilon1(self) -> float:
        return self.k * self.min_cluster_size / self.n

    @property
    def epsilon2(self) -> float:
        return self.k * self.z / self.n

    @property
    def ratio(self) -> float:
        return math.inf if self.z == 0 else self.epsilon1 / self.epsilon2

    def satisfies(self, params: SignificanceParams) -> bool:
        """Whether the instance is (params.epsilon1, params.epsilon2)-significant."""
        return (
            self.min_cluster_size >= params.epsilon1 * self.n / self.k - 1e-9
            and self.z <= params.epsilon2 * self.n / self.k + 1e-9
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "z": self.z,
            "cluster_sizes": list(self.cluster_sizes),
            "min_cluster_size": self.min_cluster_size,
            "epsilon1": self.epsilon1,
            "epsilon2": self.epsilon2,
            "ratio": None if math.isinf(self.ratio) else self.ratio,
        }


def significance_audit(data: Dataset) -> SignificanceAudit:
    """Realized cluster sizes, outlier count and epsilons of a labeled dataset."""
    labels = data.require_labels()
    ids = cluster_ids(labels)
    return SignificanceAudit(
        n=data.n,
        k=len(ids),
        z=int((labels == OUTLIER).sum()),
        cluster_sizes=[int((labels == c).sum()) for c in ids],
    )
