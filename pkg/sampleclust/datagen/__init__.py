"""Synthetic and adversarial instances, point files and outlier augmentation."""

from sampleclust.datagen.adversarial import AdversarialSpec, gen_adversarial, separation_audit
from sampleclust.datagen.augment import (
    SignificanceAudit,
    augment_outliers,
    augmentation_count,
    relabel_tiny_clusters,
    significance_audit,
)
from sampleclust.datagen.geometry import enclosing_balls, max_cluster_diameter
from sampleclust.datagen.instances import generate, load_spec, spec_from_dict
from sampleclust.datagen.io import (
    load_memberships,
    load_points,
    metadata_path,
    read_metadata,
    save_memberships,
    save_points,
    write_metadata,
)
from sampleclust.datagen.synthetic import GroundTruth, SyntheticSpec, gen_synthetic

__all__ = [
    "AdversarialSpec",
    "GroundTruth",
    "SignificanceAudit",
    "SyntheticSpec",
    "augment_outliers",
    "augmentation_count",
    "enclosing_balls",
    "gen_adversarial",
    "gen_synthetic",
    "generate",
    "load_spec",
    "load_memberships",
    "load_points",
    "max_cluster_diameter",
    "metadata_path",
    "read_metadata",
    "relabel_tiny_clusters",
    "save_memberships",
    "save_points",
    "separation_audit",
    "significance_audit",
    "spec_from_dict",
    "write_metadata",
]
