"""Instance generation from spec documents (the ``gen`` command and bench plans)."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from sampleclust.config import DatagenSettings
from sampleclust.core.types import Dataset
from sampleclust.datagen.adversarial import AdversarialSpec, gen_adversarial
from sampleclust.datagen.augment import significance_audit
from sampleclust.datagen.synthetic import GroundTruth, SyntheticSpec, gen_synthetic
from sampleclust.errors import ConfigurationError

INSTANCE_TYPES = ("synthetic", "adversarial")


def spec_from_dict(doc: dict[str, Any]) -> SyntheticSpec | AdversarialSpec:
    """Parse ``{type: synthetic|adversarial, ...}`` or ``{synthetic: {...}}``."""
    if not isinstance(doc, dict):
        raise ConfigurationError("instance spec must be a mapping")
    for kind in INSTANCE_TYPES:
        if kind in doc:
            body = doc[kind] or {}
            break
    else:
        kind = str(doc.get("type", "synthetic"))
        body = {key: value for key, value in doc.items() if key != "type"}
    if kind == "synthetic":
        return SyntheticSpec.from_dict(body)
    if kind == "adversarial":
        return AdversarialSpec.from_dict(body)
    raise ConfigurationError(f"Unknown instance type '{kind}', expected one of {', '.join(INSTANCE_TYPES)}")


def load_spec(path: Path | str) -> SyntheticSpec | AdversarialSpec:
    """Read an instance spec YAML file."""
    with open(path, encoding="utf-8") as f:
        doc = yaml.safe_load(f)
    return spec_from_dict(doc)


def generate(
    spec: SyntheticSpec | AdversarialSpec,
    settings: DatagenSettings | None = None,
) -> tuple[Dataset, GroundTruth, dict[str, Any]]:
    """Generate an instance and its sidecar metadata.

    Returns:
        Tuple of (Dataset, GroundTruth, metadata) where metadata records the spec,
        seed, realized epsilons, per-cluster radius bounds and L.
    """
    if isinstance(spec, SyntheticSpec):
        data, truth = gen_synthetic(spec, settings)
        kind, seed = "synthetic", spec.seed
    else:
        data, truth = gen_adversarial(spec)
        kind, seed = "adversarial", None

    audit = significance_audit(data)
    metadata: dict[str, Any] = {
        "type": kind,
        "spec": spec.to_dict(),
        "seed": seed,
        "n": data.n,
        "dim": data.dim,
        "significance": audit.to_dict(),
        "ground_truth": truth.to_dict(),
    }
    return data, truth, metadata
