"""Bench plan documents: instances, algorithm configurations with sweeps, trials."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from sampleclust.core.types import ObjectiveKind
from sampleclust.datagen.adversarial import AdversarialSpec
from sampleclust.datagen.instances import INSTANCE_TYPES, spec_from_dict
from sampleclust.datagen.synthetic import SyntheticSpec
from sampleclust.errors import ConfigurationError, InputError
from sampleclust.sampler.params import Variant

# algorithm keys that may hold a list of values to sweep over
SWEEP_KEYS = ("sample_size", "extra", "tau", "outlier_ratio", "runs")

_ALGORITHM_KEYS = {"name", "variant", "objective", "solver", "theory", *SWEEP_KEYS}
_THEORY_KEYS = {"eta", "delta", "xi"}


@dataclass
class InstanceEntry:
    """A dataset of the plan: generated from a spec or read from a point file."""

    name: str
    spec: SyntheticSpec | AdversarialSpec | None = None
    path: Path | None = None
    fmt: str | None = None
    k: int | None = None
    z: int | None = None
    relabel_tiny: float | None = None
    augment_fraction: float | None = None

    @classmethod
    def from_dict(cls, data: dict[str, Any], base_dir: Path | None = None) -> "InstanceEntry":
        """Parse one ``instances`` entry; relative paths resolve against ``base_dir``."""
        if not isinstance(data, dict) or "name" not in data:
            raise ConfigurationError("every instance needs a 'name'")
        data = dict(data)
        name = str(data.pop("name"))
        entry = cls(
            name=name,
            k=data.pop("k", None),
            z=data.pop("z", None),
            fmt=data.pop("format", None),
            relabel_tiny=data.pop("relabel_tiny", None),
            augment_fraction=data.pop("augment_fraction", None),
        )
        path = data.pop("path", None)
        spec_keys = [key for key in INSTANCE_TYPES if key in data]
        if (path is None) == (not spec_keys):
            raise ConfigurationError(f"instance '{name}' needs exactly one of path, synthetic, adversarial")
        if path is not None:
            p = Path(path)
            entry.path = p if p.is_absolute() or base_dir is None else base_dir / p
        else:
            entry.spec = spec_from_dict({spec_keys[0]: data.pop(spec_keys[0])})
        if data:
            raise ConfigurationError(f"instance '{name}': unknown keys {', '.join(sorted(data))}")
        return entry


@dataclass
class AlgorithmCell:
    """One fully specified algorithm configuration (a sweep point).

    Attributes:
        name: Algorithm entry name.
        label: ``name`` plus the swept values, unique within the plan.
        theory: Theory-mode parameters (eta, delta, xi); direct mode when None.
    """

    name: str
    label: str
    variant: Variant
    kind: ObjectiveKind
    solver: str | None = None
    sample_size: int | float | str | None = None
    extra: int | None = None
    tau: float | None = None
    outlier_ratio: float | None = None
    runs: int = 1
    theory: dict[str, float] | None = None

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ConfigurationError(f"{self.label}: runs must be >= 1")
        if self.theory is None and self.sample_size is None:
            raise ConfigurationError(f"{self.label}: direct mode needs sample_size (or use 'theory')")

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "label": self.label,
            "variant": self.variant.value,
            "objective": self.kind.value,
            "solver": self.solver,
            "sample_size": self.sample_size,
            "extra": self.extra,
            "tau": self.tau,
            "outlier_ratio": self.outlier_ratio,
            "runs": self.runs,
            "theory": self.theory,
        }


def expand_algorithm(data: dict[str, Any], default_runs: int = 1) -> list[AlgorithmCell]:
    """Expand list-valued sweep keys of an algorithm entry into cells."""
    if not isinstance(data, dict) or "name" not in data:
        raise ConfigurationError("every algorithm needs a 'name'")
    unknown = sorted(set(data) - _ALGORITHM_KEYS)
    if unknown:
        raise ConfigurationError(f"algorithm '{data['name']}': unknown keys {', '.join(unknown)}")
    theory = data.get("theory")
    if theory is not None:
        if not isinstance(theory, dict) or "eta" not in theory or set(theory) - _THEORY_KEYS:
            raise ConfigurationError(f"algorithm '{data['name']}': theory needs eta (and optional delta, xi)")
        theory = {key: float(value) for key, value in theory.items()}

    try:
        variant = Variant.parse(data.get("variant", "I"))
        kind = ObjectiveKind.parse(data.get("objective", "means"))
    except InputError as e:
        raise ConfigurationError(f"algorithm '{data['name']}': {e}") from e

    swept = [key for key in SWEEP_KEYS if isinstance(data.get(key), list)]
    grids = [data[key] for key in swept]
    cells: list[AlgorithmCell] = []
    for values in itertools.product(*grids):
        point = dict(zip(swept, values))
        params = {key: point.get(key, data.get(key)) for key in SWEEP_KEYS}
        label = str(data["name"])
        if swept:
            label += "[" + ",".join(f"{key}={point[key]}" for key in swept) + "]"
        cells.append(
            AlgorithmCell(
                name=str(data["name"]),
                label=label,
                variant=variant,
                kind=kind,
                solver=data.get("solver"),
                sample_size=params["sample_size"],
                extra=params["extra"],
                tau=params["tau"],
                outlier_ratio=params["outlier_ratio"],
                runs=int(params["runs"] or default_runs),
                theory=theory,
            )
        )
    return cells


@dataclass
class ExperimentPlan:
    """A bench plan: instances x algorithm cells x trials.

    Attributes:
        name: Plan name.
        master_seed: Seed all per-run seeds derive from.
        trials: Trials per (instance, cell).
        instances: Datasets.
        cells: Expanded algorithm configurations.
        document: The parsed plan document.
    """

    name: str
    master_seed: int
    trials: int
    instances: list[InstanceEntry]
    cells: list[AlgorithmCell]
    document: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict[str, Any], base_dir: Path | None = None) -> "ExperimentPlan":
        """Build a plan from a mapping."""
        if not isinstance(data, dict):
            raise ConfigurationError("plan must be a mapping")
        unknown = sorted(set(data) - {"name", "master_seed", "trials", "runs", "instances", "algorithms"})
        if unknown:
            raise ConfigurationError(f"Unknown plan keys: {', '.join(unknown)}")
        instances = [InstanceEntry.from_dict(d, base_dir) for d in data.get("instances") or []]
        default_runs = int(data.get("runs", 1))
        cells = [c for d in data.get("algorithms") or [] for c in expand_algorithm(d, default_runs)]
        if not instances or not cells:
            raise ConfigurationError("plan needs at least one instance and one algorithm")
        names = [i.name for i in instances]
        if len(set(names)) != len(names):
            raise ConfigurationError("instance names must be unique")
        labels = [c.label for c in cells]
        if len(set(labels)) != len(labels):
            raise ConfigurationError("algorithm cells must be unique; give entries distinct names")
        trials = int(data.get("trials", 1))
        if trials < 1:
            raise ConfigurationError("trials must be >= 1")
        return cls(
            name=str(data.get("name", "bench")),
            master_seed=int(data.get("master_seed", 42)),
            trials=trials,
            instances=instances,
            cells=cells,
            document=data,
        )

    @classmethod
    def from_yaml(cls, path: Path | str) -> "ExperimentPlan":
        """Load a plan from YAML; relative instance paths resolve against its directory."""
        path = Path(path)
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        return cls.from_dict(data, base_dir=path.parent)

    @property
    def run_count(self) -> int:
        return len(self.instances) * len(self.cells) * self.trials
