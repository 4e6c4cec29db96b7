"""Runtime settings: a dataclass tree loaded from YAML (see configs/default.yaml)."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import yaml

from sampleclust.errors import ConfigurationError
from sampleclust.subroutines.base import IterConfig


@dataclass
class SamplerSettings:
    """Sampling-phase settings."""

    max_sample_size: int = 200_000
    default_tau: float = 2.0
    default_outlier_ratio: float = 2.0
    kmeanspp_retries: int = 10
    n_init: int = 10
    local_trials: int | None = None


@dataclass
class SelectorSettings:
    """One-pass selection settings."""

    chunk_size: int = 65_536
    membership_cap: int = 50_000_000


@dataclass
class DatagenSettings:
    """Synthetic data and outlier placement settings."""

    max_attempts: int = 1_000_000
    max_enlargements: int = 5
    box_inflation: float = 3.0
    exact_diameter_pairs: int = 20_000_000


@dataclass
class Config:
    """Settings shared by the CLI, the sampling framework and the bench runner.

    ``seed`` is the default base seed of ``sclust run``; ``workers`` the default
    thread count of ``sclust bench``.
    """

    output_dir: Path | None = None
    workers: int = 1
    seed: int = 42
    iteration: IterConfig = field(default_factory=IterConfig)
    sampler: SamplerSettings = field(default_factory=SamplerSettings)
    selector: SelectorSettings = field(default_factory=SelectorSettings)
    datagen: DatagenSettings = field(default_factory=DatagenSettings)

    @classmethod
    def from_yaml(cls, path: Path | str) -> "Config":
        path = Path(path)
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"{path}: top level must be a mapping")
        return cls._from_dict(data)

    @classmethod
    def _from_dict(cls, data: dict[str, Any]) -> "Config":
        data = dict(data)
        sections = {
            "iteration": IterConfig,
            "sampler": SamplerSettings,
            "selector": SelectorSettings,
            "datagen": DatagenSettings,
        }
        built: dict[str, Any] = {}
        for key, section_cls in sections.items():
            section_data = data.pop(key, None) or {}
            try:
                built[key] = section_cls(**section_data)
            except TypeError as e:
                raise ConfigurationError(f"Invalid '{key}' section: {e}") from e

        if data.get("output_dir"):
            data["output_dir"] = Path(data["output_dir"])

        unknown = sorted(set(data) - set(cls.__dataclass_fields__))
        if unknown:
            raise ConfigurationError(f"Unknown config keys: {', '.join(unknown)}")

        return cls(**built, **data)

    def to_dict(self) -> dict[str, Any]:
        result = asdict(self)
        if result["output_dir"]:
            result["output_dir"] = str(result["output_dir"])
        return result

    def to_yaml(self, path: Path | str) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)


def load_config(path: Path | str | None = None) -> Config:
    """Config from ``path``, or the defaults when no file is given."""
    if path is None:
        return Config()
    return Config.from_yaml(path)
