"""sampleclust - Center-based clustering with outliers via uniform sampling."""

__version__ = "0.1.0"

from sampleclust.core.types import (
    OUTLIER,
    CenterSet,
    ClusteringResult,
    Dataset,
    ObjectiveKind,
)

__all__ = [
    "__version__",
    "OUTLIER",
    "Dataset",
    "CenterSet",
    "ClusteringResult",
    "ObjectiveKind",
]
