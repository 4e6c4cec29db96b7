"""Classical clustering subroutines run on the sample by the sampling algorithms."""

from sampleclust.subroutines.base import IterationTrace, IterConfig, KCenterSolution
from sampleclust.subroutines.kcenter import charikar_kcenter_outliers, gonzalez_kcenter
from sampleclust.subroutines.kmeans import (
    kmeanspp_seed,
    lloyd,
    lloyd_trace,
    trimmed_lloyd,
    trimmed_lloyd_trace,
    weiszfeld,
)

__all__ = [
    "IterConfig",
    "IterationTrace",
    "KCenterSolution",
    "gonzalez_kcenter",
    "charikar_kcenter_outliers",
    "kmeanspp_seed",
    "lloyd",
    "lloyd_trace",
    "trimmed_lloyd",
    "trimmed_lloyd_trace",
    "weiszfeld",
]
