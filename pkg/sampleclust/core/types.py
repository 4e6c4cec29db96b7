"""Core data types: datasets, center sets and clustering results."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Sequence

import numpy as np

from sampleclust.errors import InputError

OUTLIER = -1
OUTLIER_LABEL = "OUTLIER"


class ObjectiveKind(str, Enum):
    """Outlier-trimmed clustering objectives."""

    CENTER = "center"   # max distance
    MEDIAN = "median"   # average distance
    MEANS = "means"     # average squared distance

    @classmethod
    def parse(cls, value: "ObjectiveKind | str") -> "ObjectiveKind":
        """Parse a kind from its name or value, case-insensitively."""
        if isinstance(value, ObjectiveKind):
            return value
        key = str(value).strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise InputError(f"Unknown objective kind: {value!r}")

    @property
    def squared(self) -> bool:
        """Whether per-point costs are squared distances."""
        return self is ObjectiveKind.MEANS


def as_points(points: Any, name: str = "points") -> np.ndarray:
    """Coerce input to a finite float64 array of shape (n, D).

    A 1-D sequence is read as n points in R^1.
    """
    if isinstance(points, Dataset):
        return points.points
    if isinstance(points, CenterSet):
        return points.centers
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise InputError(f"{name} must be 2-D (n, D), got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InputError(f"{name} must be nonempty with D >= 1, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains NaN or Inf coordinates")
    return arr


def encode_labels(labels: Sequence[Any]) -> tuple[np.ndarray, tuple[str, ...]]:
    """Encode string or integer labels to integer codes.

    ``OUTLIER`` (or -1) maps to :data:`OUTLIER`. If every other label is an integer
    string the integer is the code; otherwise codes follow sorted label order and
    the names are returned.
    """
    raw = [str(v).strip() for v in labels]
    others = sorted({v for v in raw if v not in (OUTLIER_LABEL, str(OUTLIER))})

    def _is_int(s: str) -> bool:
        try:
            return int(s) >= 0 and str(int(s)) == s
        except ValueError:
            return False

    if all(_is_int(v) for v in others):
        codes = np.array(
            [OUTLIER if v in (OUTLIER_LABEL, str(OUTLIER)) else int(v) for v in raw],
            dtype=np.int64,
        )
        return codes, ()

    lookup = {name: code for code, name in enumerate(others)}
    codes = np.array(
        [OUTLIER if v in (OUTLIER_LABEL, str(OUTLIER)) else lookup[v] for v in raw],
        dtype=np.int64,
    )
    return codes, tuple(others)


@dataclass
class Dataset:
    """Points in R^D with optional ground-truth labels.

    Attributes:
        points: Array of shape (n, D).
        labels: Optional integer codes per point; :data:`OUTLIER` marks outliers.
        name: Identifier string.
        label_names: Optional names for label codes (code ``i`` -> ``label_names[i]``).
    """

    points: np.ndarray
    labels: np.ndarray | None = None
    name: str = "dataset"
    label_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        """Validate dataset invariants."""
        self.points = as_points(self.points)
        if self.labels is not None:
            labels = np.asarray(self.labels)
            if labels.dtype.kind not in "iu":
                labels, names = encode_labels(labels.tolist())
                if names:
                    self.label_names = names
            labels = labels.astype(np.int64, copy=False)
            if labels.shape != (self.n,):
                raise InputError(
                    f"labels must have one entry per point: expected ({self.n},), got {labels.shape}"
                )
            if labels.size and labels.min() < OUTLIER:
                raise InputError("label codes must be >= -1")
            self.labels = labels

    @property
    def n(self) -> int:
        """Number of points."""
        return int(self.points.shape[0])

    @property
    def dim(self) -> int:
        """Dimension D."""
        return int(self.points.shape[1])

    @property
    def has_labels(self) -> bool:
        """Whether ground-truth labels are present."""
        return self.labels is not None

    def require_labels(self) -> np.ndarray:
        """Return labels or raise if absent."""
        if self.labels is None:
            raise InputError(f"Dataset '{self.name}' has no labels")
        return self.labels

    @property
    def outlier_mask(self) -> np.ndarray:
        """Boolean mask of ground-truth outliers."""
        return self.require_labels() == OUTLIER

    @property
    def cluster_ids(self) -> list[int]:
        """Sorted ground-truth cluster codes (outliers excluded)."""
        labels = self.require_labels()
        return [int(c) for c in np.unique(labels[labels != OUTLIER])]

    def label_strings(self) -> list[str]:
        """Labels rendered as strings (``OUTLIER`` for outliers)."""
        labels = self.require_labels()
        names = self.label_names
        return [
            OUTLIER_LABEL if c == OUTLIER else (names[c] if names else str(c))
            for c in labels.tolist()
        ]

    def subset(self, indices: np.ndarray, name: str | None = None) -> "Dataset":
        """Select points (with repetition allowed) by index."""
        indices = np.asarray(indices, dtype=np.int64)
        return Dataset(
            points=self.points[indices],
            labels=None if self.labels is None else self.labels[indices],
            name=name or self.name,
            label_names=self.label_names,
        )

    def __len__(self) -> int:
        return self.n


@dataclass
class CenterSet:
    """An ordered, nonempty list of cluster centers (the set H)."""

    centers: np.ndarray

    def __post_init__(self) -> None:
        """Validate center invariants."""
        self.centers = as_points(self.centers, name="centers")

    @classmethod
    def from_points(cls, points: Dataset | np.ndarray, indices: Sequence[int]) -> "CenterSet":
        """Build a center set from input point indices."""
        arr = as_points(points)
        return cls(arr[np.asarray(indices, dtype=np.int64)].copy())

    @property
    def dim(self) -> int:
        """Dimension D."""
        return int(self.centers.shape[1])

    def check_dim(self, dim: int) -> None:
        """Raise if the centers do not live in R^dim."""
        if self.dim != dim:
            raise InputError(f"Dimension mismatch: centers are in R^{self.dim}, points in R^{dim}")

    def union(self, other: "CenterSet") -> "CenterSet":
        """Concatenate two center sets (order preserved)."""
        other.check_dim(self.dim)
        return CenterSet(np.vstack([self.centers, other.centers]))

    def to_list(self) -> list[list[float]]:
        """Centers as nested lists."""
        return self.centers.tolist()

    def __len__(self) -> int:
        return int(self.centers.shape[0])


@dataclass
class ClusteringResult:
    """Centers, per-point memberships and the trimmed objective.

    Attributes:
        centers: Center set H.
        memberships: Nearest-center index per point, :data:`OUTLIER` for discarded points.
        outlier_count: Number of discarded points z.
        objective: Trimmed objective value.
        kind: Objective kind.
    """

    centers: CenterSet
    memberships: np.ndarray
    outlier_count: int
    objective: float
    kind: ObjectiveKind
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def outlier_mask(self) -> np.ndarray:
        """Boolean mask of returned outliers."""
        return self.memberships == OUTLIER

    @property
    def outlier_indices(self) -> np.ndarray:
        """Indices of returned outliers."""
        return np.flatnonzero(self.memberships == OUTLIER)

    def cluster_sizes(self) -> list[int]:
        """Number of inliers assigned to each center."""
        inliers = self.memberships[self.memberships != OUTLIER]
        return np.bincount(inliers, minlength=len(self.centers)).tolist()

    def summary(self) -> dict[str, Any]:
        """Small JSON-friendly summary (no per-point arrays)."""
        return {
            "kind": self.kind.value,
            "objective": self.objective,
            "outlier_count": self.outlier_count,
            "num_centers": len(self.centers),
            "cluster_sizes": self.cluster_sizes(),
        }
