"""Core subpackage: points, distances and outlier-trimmed objectives."""

from sampleclust.core.objective import (
    assign_memberships,
    cost,
    dist_to_set,
    exact_sum,
    nearest_centers,
    objective_with_outliers,
    point_costs,
    trim_order,
    trimmed_aggregate,
)
from sampleclust.core.types import (
    OUTLIER,
    OUTLIER_LABEL,
    CenterSet,
    ClusteringResult,
    Dataset,
    ObjectiveKind,
    as_points,
    encode_labels,
)

__all__ = [
    "OUTLIER",
    "OUTLIER_LABEL",
    "Dataset",
    "CenterSet",
    "ClusteringResult",
    "ObjectiveKind",
    "as_points",
    "encode_labels",
    "dist_to_set",
    "nearest_centers",
    "point_costs",
    "trim_order",
    "exact_sum",
    "trimmed_aggregate",
    "objective_with_outliers",
    "cost",
    "assign_memberships",
]
