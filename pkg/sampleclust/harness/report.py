"""Per-run evaluation report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from sampleclust.harness.versioning import CURRENT_SCHEMA_VERSION, check_compatibility

# columns of records.csv; timings are kept in timings.csv so records reproduce exactly
RECORD_COLUMNS = [
    "run_id",
    "instance",
    "algorithm",
    "cell",
    "variant",
    "kind",
    "trial",
    "seed",
    "n",
    "k",
    "z",
    "sample_size",
    "extra",
    "tau",
    "m",
    "num_centers",
    "objective",
    "normalized_objective",
    "precision",
    "purity",
    "status",
    "error",
]

TIMING_COLUMNS = ["run_id", "sample", "solve", "select", "total"]


@dataclass
class EvalReport:
    """One evaluated run: configuration echo, metrics and timings.

    Attributes:
        run_id: Unique id inside a bench directory.
        instance: Dataset name.
        algorithm: Configuration name from the plan (or ``run``).
        cell: Configuration label including swept values.
        variant: I or II.
        kind: Objective kind value.
        trial: Trial index.
        seed: Seed of the boosted run.
        config: Framework configuration echo.
        objective: Trimmed objective on the full dataset.
        normalized_objective: Objective over the group minimum.
        precision: Truth-outlier recall of the returned outliers; None without truth outliers.
        purity: Max-overlap purity; None without labels.
        timings: Seconds per phase (sample, solve, select).
        tau: (k + k') / k.
        boost: Boosting diagnostics.
    """

    run_id: str
    instance: str
    algorithm: str
    cell: str
    variant: str
    kind: str
    trial: int = 0
    seed: int = 0
    n: int = 0
    k: int = 0
    z: int = 0
    sample_size: int = 0
    extra: int = 0
    tau: float = 1.0
    m: int = 1
    num_centers: int = 0
    objective: float | None = None
    normalized_objective: float | None = None
    normalization_flag: bool = False
    precision: float | None = None
    purity: float | None = None
    status: str = "ok"
    error: str = ""
    warnings: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    config: dict[str, Any] = field(default_factory=dict)
    boost: dict[str, Any] = field(default_factory=dict)
    schema_version: str = CURRENT_SCHEMA_VERSION

    def record(self) -> dict[str, Any]:
        """Flat row for records.csv (no timings)."""
        return {col: getattr(self, col) for col in RECORD_COLUMNS}

    def timing_row(self) -> dict[str, Any]:
        """Flat row for timings.csv."""
        row: dict[str, Any] = {"run_id": self.run_id}
        for phase in ("sample", "solve", "select"):
            row[phase] = self.timings.get(phase, 0.0)
        row["total"] = sum(self.timings.get(p, 0.0) for p in ("sample", "solve", "select"))
        return row

    def fail(self, error: str) -> None:
        """Mark the run as failed."""
        self.status = "failed"
        self.error = error

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EvalReport":
        """Create from dictionary, checking the schema version."""
        check_compatibility(str(data.get("schema_version", "0.0.0")))
        known = {f.name for f in fields(cls)}
        return cls(**{key: value for key, value in data.items() if key in known})

    def save(self, path: Path | str) -> Path:
        """Save the report as JSON."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2)
        return path

    @classmethod
    def load(cls, path: Path | str) -> "EvalReport":
        """Load a report from JSON."""
        with open(path, encoding="utf-8") as f:
            return cls.from_dict(json.load(f))
