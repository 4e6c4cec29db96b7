"""Synthetic significant instances: Gaussian clusters plus outliers outside their balls."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from typing import Any

import numpy as np
from scipy.spatial.distance import cdist

from sampleclust.config import DatagenSettings
from sampleclust.core.types import OUTLIER, CenterSet, Dataset
from sampleclust.datagen.geometry import max_cluster_diameter, sample_outside_balls
from sampleclust.errors import ConfigurationError
from sampleclust.logging import get_logger


@dataclass
class SyntheticSpec:
    """Parameters of a synthetic instance.

    Attributes:
        k: Number of clusters.
        n: Total number of points, outliers included.
        z: Number of outliers.
        dim: Dimension D.
        side: Side length of the hypercube holding the cluster centers.
        sigma: Per-coordinate standard deviation of every cluster.
        min_cluster_frac: Share of the n - z inliers in the smallest cluster;
            ``None`` means an even split.
        seed: Random seed.
    """

    k: int = 8
    n: int = 100_000
    z: int = 2_000
    dim: int = 100
    side: float = 400.0
    sigma: float = math.sqrt(1000.0)
    min_cluster_frac: float | None = None
    seed: int = 42

    def __post_init__(self) -> None:
        if self.k < 1 or self.dim < 1:
            raise ConfigurationError(f"k and dim must be >= 1, got k={self.k}, dim={self.dim}")
        if self.z < 0 or self.z >= self.n:
            raise ConfigurationError(f"Need 0 <= z < n, got z={self.z}, n={self.n}")
        if self.n - self.z < self.k:
            raise ConfigurationError(f"n - z = {self.n - self.z} inliers cannot fill k={self.k} clusters")
        if self.side <= 0 or self.sigma < 0:
            raise ConfigurationError("side must be > 0 and sigma >= 0")
        frac = self.min_frac
        if not 0.0 < frac <= 1.0 / self.k + 1e-12:
            raise ConfigurationError(f"min_cluster_frac must lie in (0, 1/k], got {frac}")
        if frac * self.inliers < 1.0 - 1e-9:
            raise ConfigurationError("min_cluster_frac * (n - z) must be >= 1")

    @property
    def inliers(self) -> int:
        return self.n - self.z

    @property
    def min_frac(self) -> float:
        return 1.0 / self.k if self.min_cluster_frac is None else float(self.min_cluster_frac)

    def cluster_sizes(self) -> list[int]:
        """Cluster sizes; cluster 0 is the smallest, the rest split the remainder evenly."""
        if self.k == 1:
            return [self.inliers]
        smallest = max(1, int(math.floor(self.min_frac * self.inliers + 1e-9)))
        rest = self.inliers - smallest
        base, extra = divmod(rest, self.k - 1)
        return [smallest] + [base + (1 if j < extra else 0) for j in range(self.k - 1)]

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SyntheticSpec":
        """Build a spec from a mapping; ``D`` is accepted for ``dim``."""
        data = dict(data)
        data.pop("type", None)
        if "D" in data:
            data["dim"] = data.pop("D")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigurationError(f"Unknown synthetic spec keys: {', '.join(unknown)}")
        return cls(**data)


@dataclass
class GroundTruth:
    """Planted structure of a generated instance, recomputed from the data.

    Attributes:
        generating_centers: Planted centers (proxy for the optimal centers).
        labels: Cluster code per point, OUTLIER for outliers.
        r_bound: Max distance of a cluster's points to its planted center.
        diameter: Max intra-cluster diameter L.
        diameter_method: ``exact`` or ``radius_bound``.
        cluster_sizes: Realized cluster sizes.
    """

    generating_centers: CenterSet
    labels: np.ndarray
    r_bound: list[float]
    diameter: float
    diameter_method: str
    cluster_sizes: list[int]

    @property
    def r_opt_bound(self) -> float:
        """Upper bound on the optimal k-center radius with z outliers."""
        return max(self.r_bound) if self.r_bound else 0.0

    @property
    def outlier_count(self) -> int:
        return int((self.labels == OUTLIER).sum())

    def to_dict(self) -> dict[str, Any]:
        """Summary without per-point labels."""
        return {
            "generating_centers": self.generating_centers.to_list(),
            "r_bound": [float(r) for r in self.r_bound],
            "r_opt_bound": self.r_opt_bound,
            "L": float(self.diameter),
            "L_method": self.diameter_method,
            "cluster_sizes": list(self.cluster_sizes),
            "outlier_count": self.outlier_count,
        }

    @classmethod
    def from_dataset(
        cls,
        data: Dataset,
        centers: np.ndarray,
        max_pairs: int = 20_000_000,
    ) -> "GroundTruth":
        """Recompute radii, diameter and sizes from labeled data and planted centers."""
        labels = data.require_labels()
        X = data.points
        r_bound: list[float] = []
        sizes: list[int] = []
        for j in range(centers.shape[0]):
            members = X[labels == j]
            sizes.append(int(members.shape[0]))
            r_bound.append(float(cdist(members, centers[j:j + 1]).max()) if members.shape[0] else 0.0)
        diameter, method = max_cluster_diameter(X, labels, max_pairs)
        return cls(
            generating_centers=CenterSet(centers),
            labels=labels.copy(),
            r_bound=r_bound,
            diameter=diameter,
            diameter_method=method,
            cluster_sizes=sizes,
        )


def gen_synthetic(
    spec: SyntheticSpec,
    settings: DatagenSettings | None = None,
) -> tuple[Dataset, GroundTruth]:
    """Generate a synthetic instance.

    Centers are uniform in [0, side]^D and inliers are isotropic Gaussians around
    them. Outliers are uniform in the center hypercube inflated ``box_inflation``
    times around its middle, kept only outside every cluster ball (planted center,
    max realized member distance). Points are shuffled.

    Args:
        spec: Instance parameters.
        settings: Rejection-sampling and diameter settings.

    Returns:
        Tuple of (Dataset, GroundTruth).

    Raises:
        DataGenerationError: If the outliers cannot be placed.
    """
    settings = settings or DatagenSettings()
    logger = get_logger()
    rng = np.random.default_rng(spec.seed)
    D = spec.dim

    centers = rng.uniform(0.0, spec.side, size=(spec.k, D))
    sizes = spec.cluster_sizes()
    blocks = [centers[j] + rng.normal(0.0, spec.sigma, size=(size, D)) for j, size in enumerate(sizes)]
    inliers = np.vstack(blocks)
    inlier_labels = np.repeat(np.arange(spec.k, dtype=np.int64), sizes)

    radii = np.array(
        [float(cdist(block, centers[j:j + 1]).max()) for j, block in enumerate(blocks)],
        dtype=np.float64,
    )
    mid = spec.side / 2.0
    half = settings.box_inflation * spec.side / 2.0
    outliers = sample_outside_balls(
        spec.z,
        centers,
        radii,
        np.full(D, mid - half),
        np.full(D, mid + half),
        rng,
        settings,
    )

    points = np.vstack([inliers, outliers])
    labels = np.concatenate([inlier_labels, np.full(spec.z, OUTLIER, dtype=np.int64)])
    perm = rng.permutation(spec.n)
    data = Dataset(points=points[perm], labels=labels[perm], name=f"synthetic-k{spec.k}-n{spec.n}-seed{spec.seed}")

    truth = GroundTruth.from_dataset(data, centers, settings.exact_diameter_pairs)
    logger.info(
        "generated synthetic instance",
        n=spec.n,
        k=spec.k,
        z=spec.z,
        dim=D,
        r_opt_bound=truth.r_opt_bound,
        L_method=truth.diameter_method,
    )
    return data, truth
