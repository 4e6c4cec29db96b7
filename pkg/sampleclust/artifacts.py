"""Output layout conventions for bench report directories."""

from __future__ import annotations

from pathlib import Path

# Standard subdirectory names
DIR_RUNS = "runs"           # one JSON report per run
DIR_LOGS = "logs"           # run logs


class ReportLayout:
    """Standard layout of a bench output directory.

    Structure:
        {output_dir}/
            manifest.json       # Bench metadata and status
            plan.yaml           # Plan echo
            records.csv         # One row per run (reproducible)
            aggregates.csv      # Mean/std per cell and metric (long format)
            timings.csv         # Wall-clock seconds per run and phase
            comparison.csv      # Written by ``compare``
            runs/
                <run_id>.json   # Full EvalReport
            logs/
                bench.jsonl     # Structured log
    """

    def __init__(self, output_dir: Path | str) -> None:
        """Initialize layout.

        Args:
            output_dir: Root output directory.
        """
        self.root = Path(output_dir)

    @property
    def runs_dir(self) -> Path:
        """Per-run report directory."""
        return self.root / DIR_RUNS

    @property
    def logs_dir(self) -> Path:
        """Logs directory."""
        return self.root / DIR_LOGS

    @property
    def manifest_path(self) -> Path:
        return self.root / "manifest.json"

    @property
    def plan_path(self) -> Path:
        return self.root / "plan.yaml"

    @property
    def records_path(self) -> Path:
        return self.root / "records.csv"

    @property
    def aggregates_path(self) -> Path:
        return self.root / "aggregates.csv"

    @property
    def timings_path(self) -> Path:
        return self.root / "timings.csv"

    @property
    def comparison_path(self) -> Path:
        return self.root / "comparison.csv"

    @property
    def log_path(self) -> Path:
        return self.logs_dir / "bench.jsonl"

    def run_path(self, run_id: str) -> Path:
        """Report path of one run."""
        return self.runs_dir / f"{run_id}.json"

    def run_paths(self) -> list[Path]:
        """Existing run reports, sorted by name."""
        if not self.runs_dir.is_dir():
            return []
        return sorted(self.runs_dir.glob("*.json"))

    def create_dirs(self) -> None:
        """Create all standard directories."""
        for d in [self.runs_dir, self.logs_dir]:
            d.mkdir(parents=True, exist_ok=True)
