"""Tightness instance for the extra-center budget.

Each cluster is a stack of identical points and each outlier sits alone; the
k + z distinct locations are x apart on the first axis, so the optimal radius is
0 while any clustering of all locations with fewer than k + z centers has
radius at least x / 2.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
from typing import Any

import numpy as np
from scipy.spatial.distance import pdist

from sampleclust.core.types import OUTLIER, CenterSet, Dataset
from sampleclust.datagen.synthetic import GroundTruth
from sampleclust.errors import ConfigurationError


@dataclass
class AdversarialSpec:
    """Parameters of the tightness instance.

    Attributes:
        k: Number of clusters.
        cluster_sizes: Number of stacked points per cluster.
        z: Number of outliers (single points).
        x: Spacing between consecutive locations.
        dim: Dimension D; locations vary along the first axis only.
    """

    k: int = 2
    cluster_sizes: list[int] = field(default_factory=lambda: [10, 10])
    z: int = 3
    x: float = 10.0
    dim: int = 1

    def __post_init__(self) -> None:
        self.cluster_sizes = [int(s) for s in self.cluster_sizes]
        if self.k < 1 or len(self.cluster_sizes) != self.k:
            raise ConfigurationError(f"cluster_sizes must list k={self.k} sizes, got {self.cluster_sizes}")
        if min(self.cluster_sizes) < 1:
            raise ConfigurationError("every cluster needs at least one point")
        if self.z < 0 or self.x <= 0 or self.dim < 1:
            raise ConfigurationError("need z >= 0, x > 0 and dim >= 1")

    @property
    def n(self) -> int:
        return sum(self.cluster_sizes) + self.z

    def locations(self) -> np.ndarray:
        """The k + z distinct locations: clusters first, then outliers."""
        locs = np.zeros((self.k + self.z, self.dim), dtype=np.float64)
        locs[:, 0] = np.arange(self.k + self.z, dtype=np.float64) * self.x
        return locs

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AdversarialSpec":
        data = dict(data)
        data.pop("type", None)
        if "D" in data:
            data["dim"] = data.pop("D")
        unknown = sorted(set(data) - {f.name for f in fields(cls)})
        if unknown:
            raise ConfigurationError(f"Unknown adversarial spec keys: {', '.join(unknown)}")
        return cls(**data)


def gen_adversarial(spec: AdversarialSpec) -> tuple[Dataset, GroundTruth]:
    """Build the tightness instance (deterministic, unshuffled)."""
    locs = spec.locations()
    counts = list(spec.cluster_sizes) + [1] * spec.z
    points = np.repeat(locs, counts, axis=0)
    labels = np.concatenate(
        [
            np.repeat(np.arange(spec.k, dtype=np.int64), spec.cluster_sizes),
            np.full(spec.z, OUTLIER, dtype=np.int64),
        ]
    )
    data = Dataset(points=points, labels=labels, name=f"adversarial-k{spec.k}-z{spec.z}")
    truth = GroundTruth(
        generating_centers=CenterSet(locs[: spec.k]),
        labels=labels.copy(),
        r_bound=[0.0] * spec.k,
        diameter=0.0,
        diameter_method="exact",
        cluster_sizes=list(spec.cluster_sizes),
    )
    return data, truth


def separation_audit(data: Dataset, x: float) -> bool:
    """Whether all distinct locations of ``data`` are at least x apart."""
    distinct = np.unique(data.points, axis=0)
    if distinct.shape[0] < 2:
        return True
    return bool(pdist(distinct).min() >= x)
