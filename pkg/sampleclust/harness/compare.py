"""Normalize and tabulate the run reports of a bench directory."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

from rich.table import Table

from sampleclust.artifacts import ReportLayout
from sampleclust.errors import InputError
from sampleclust.harness.report import EvalReport
from sampleclust.harness.runner import mean_std, normalize_reports, write_csv

COMPARISON_COLUMNS = [
    "instance",
    "kind",
    "cell",
    "runs",
    "failed",
    "objective_mean",
    "normalized_mean",
    "precision_mean",
    "purity_mean",
    "time_mean",
]


@dataclass
class Comparison:
    """Per (instance, kind, cell) means over the ok runs."""

    rows: list[dict[str, Any]]
    path: Path | None = None

    def to_table(self) -> Table:
        """Render as a rich table."""
        table = Table(title="Comparison")
        for col in COMPARISON_COLUMNS:
            table.add_column(col, justify="left" if col in ("instance", "kind", "cell") else "right")
        for row in self.rows:
            table.add_row(*[_fmt(row.get(col)) for col in COMPARISON_COLUMNS])
        return table


def _fmt(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


def load_reports(report_dir: Path | str) -> list[EvalReport]:
    """Load every run report of a bench directory (schema-checked)."""
    layout = ReportLayout(report_dir)
    paths = layout.run_paths()
    if not paths:
        raise InputError(f"No run reports under {layout.runs_dir}")
    return [EvalReport.load(p) for p in paths]


def compare(report_dir: Path | str, write: bool = True) -> Comparison:
    """Group reports by (instance, kind), re-normalize, and average per cell."""
    layout = ReportLayout(report_dir)
    reports = load_reports(report_dir)
    normalize_reports(reports)

    groups: dict[tuple[str, str, str], list[EvalReport]] = {}
    for r in reports:
        groups.setdefault((r.instance, r.kind, r.cell), []).append(r)

    rows: list[dict[str, Any]] = []
    for (instance, kind, cell), group in sorted(groups.items(), key=lambda item: item[0]):
        ok = [r for r in group if r.status == "ok"]

        def mean_of(attr: str) -> float | None:
            return mean_std([float(getattr(r, attr)) for r in ok if getattr(r, attr) is not None])[0]

        rows.append(
            {
                "instance": instance,
                "kind": kind,
                "cell": cell,
                "runs": len(ok),
                "failed": len(group) - len(ok),
                "objective_mean": mean_of("objective"),
                "normalized_mean": mean_of("normalized_objective"),
                "precision_mean": mean_of("precision"),
                "purity_mean": mean_of("purity"),
                "time_mean": mean_std([sum(r.timings.values()) for r in ok])[0],
            }
        )
    path = write_csv(layout.comparison_path, rows, COMPARISON_COLUMNS) if write else None
    return Comparison(rows=rows, path=path)
