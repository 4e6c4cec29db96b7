"""Test fixtures and conftest."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np
import yaml
import pytest

from sampleclust.core.types import Dataset
from sampleclust.datagen.synthetic import SyntheticSpec, gen_synthetic
from sampleclust.logging import configure_logging
from tests.fixtures import blobs


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    """Keep library logs at warning level during tests."""
    configure_logging(level=logging.WARNING)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(1234)


@pytest.fixture
def blob_data() -> Dataset:
    """Three separated 2-D clusters of 50 points plus 5 far outliers."""
    return blobs(k=3, per_cluster=50, z=5, dim=2)


@pytest.fixture
def small_synthetic() -> Dataset:
    """Small labeled Gaussian mixture with planted outliers."""
    data, _ = gen_synthetic(SyntheticSpec(k=3, n=600, z=12, dim=4, seed=5))
    return data


@pytest.fixture
def write_plan(tmp_path: Path):
    """Write a plan document into tmp_path and return its path."""
    def _write(doc: dict, name: str = "plan.yaml") -> Path:
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as f:
            yaml.safe_dump(doc, f, sort_keys=False)
        return path

    return _write
