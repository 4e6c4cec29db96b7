"""Run evaluation and bench orchestration."""

from __future__ import annotations

import csv
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

import numpy as np
import yaml
from rich.progress import BarColumn, Progress, TaskProgressColumn, TextColumn, TimeElapsedColumn

from sampleclust.artifacts import ReportLayout
from sampleclust.config import Config
from sampleclust.core.types import ClusteringResult, Dataset
from sampleclust.datagen.augment import augment_outliers, relabel_tiny_clusters, significance_audit
from sampleclust.datagen.instances import generate
from sampleclust.datagen.io import load_points
from sampleclust.datagen.synthetic import GroundTruth
from sampleclust.errors import ConfigurationError
from sampleclust.harness.metrics import normalize_group, precision, purity
from sampleclust.harness.plan import AlgorithmCell, ExperimentPlan, InstanceEntry
from sampleclust.harness.report import RECORD_COLUMNS, TIMING_COLUMNS, EvalReport
from sampleclust.logging import LogContext, get_logger
from sampleclust.manifest import RunManifest
from sampleclust.random import DeterministicRNG, create_rng
from sampleclust.sampler.params import (
    FrameworkConfig,
    SignificanceParams,
    Variant,
    direct_budget,
)
from sampleclust.selector.boosting import boosted_run

AGGREGATE_METRICS = ("objective", "normalized_objective", "precision", "purity")
AGGREGATE_COLUMNS = [
    "instance",
    "algorithm",
    "cell",
    "variant",
    "kind",
    "sample_size",
    "extra",
    "tau",
    "m",
    "metric",
    "count",
    "failed",
    "mean",
    "std",
]


@dataclass
class ResolvedInstance:
    """A dataset ready for runs, with its k, z and optional ground truth."""

    name: str
    data: Dataset
    k: int
    z: int
    truth: GroundTruth | None = None
    min_cluster_size: int | None = None

    @property
    def labeled(self) -> bool:
        return self.data.has_labels


def resolve_instance(entry: InstanceEntry, config: Config | None = None, seed: int = 42) -> ResolvedInstance:
    """Generate or load an instance; k and z default to the labeled structure."""
    config = config or Config()
    truth: GroundTruth | None = None
    if entry.spec is not None:
        data, truth, _ = generate(entry.spec, config.datagen)
        data.name = entry.name
    else:
        assert entry.path is not None
        data = load_points(entry.path, entry.fmt, name=entry.name)
        if entry.relabel_tiny is not None:
            data = relabel_tiny_clusters(data, entry.relabel_tiny)
        if entry.augment_fraction:
            rng = create_rng(seed, "augment", entry.name)
            data = augment_outliers(data, entry.augment_fraction, rng, config.datagen)

    k, z, min_size = entry.k, entry.z, None
    if data.has_labels:
        audit = significance_audit(data)
        k = audit.k if k is None else k
        z = audit.z if z is None else z
        min_size = audit.min_cluster_size
    if k is None or z is None:
        raise ConfigurationError(f"instance '{entry.name}' is unlabeled; set k and z explicitly")
    return ResolvedInstance(name=entry.name, data=data, k=int(k), z=int(z), truth=truth, min_cluster_size=min_size)


def build_framework_config(
    cell: AlgorithmCell,
    instance: ResolvedInstance,
    seed: int,
    config: Config | None = None,
) -> FrameworkConfig:
    """Framework configuration of one cell on one instance."""
    config = config or Config()
    n, k, z = instance.data.n, instance.k, instance.z
    budget = None
    params = None
    if cell.theory is not None:
        if instance.min_cluster_size is None:
            raise ConfigurationError(f"theory mode needs a labeled instance, '{instance.name}' has no labels")
        params = SignificanceParams.from_instance(n, k, z, instance.min_cluster_size, **cell.theory)
    else:
        assert cell.sample_size is not None
        budget = direct_budget(
            n,
            k,
            z,
            cell.variant,
            cell.sample_size,
            extra=cell.extra,
            tau=cell.tau,
            outlier_ratio=cell.outlier_ratio,
            default_tau=config.sampler.default_tau,
            default_outlier_ratio=config.sampler.default_outlier_ratio,
        )
    return FrameworkConfig(
        variant=cell.variant,
        kind=cell.kind,
        k=k,
        z=z,
        budget=budget,
        params=params,
        solver=cell.solver,
        seed=seed,
        iteration=config.iteration,
        max_sample_size=config.sampler.max_sample_size,
        kmeanspp_retries=config.sampler.kmeanspp_retries,
        n_init=config.sampler.n_init,
        local_trials=config.sampler.local_trials,
    )


def evaluate_run(
    data: Dataset,
    cfg: FrameworkConfig,
    m: int = 1,
    seed: int | None = None,
    config: Config | None = None,
    run_id: str = "run",
    algorithm: str = "run",
    cell: str | None = None,
    trial: int = 0,
) -> tuple[EvalReport, ClusteringResult]:
    """Boosted run on one dataset plus metrics against its labels (if any)."""
    config = config or Config()
    seed = cfg.seed if seed is None else seed
    result, boost = boosted_run(
        data,
        cfg,
        m,
        seed,
        chunk_size=config.selector.chunk_size,
        membership_cap=config.selector.membership_cap,
    )
    budget = boost.budget
    extra = int(budget.get("extra", 0))
    report = EvalReport(
        run_id=run_id,
        instance=data.name,
        algorithm=algorithm,
        cell=cell or algorithm,
        variant=cfg.variant.value,
        kind=cfg.kind.value,
        trial=trial,
        seed=int(seed),
        n=data.n,
        k=cfg.k,
        z=cfg.z,
        sample_size=int(budget.get("sample_size", 0)),
        extra=extra,
        tau=(cfg.k + extra) / cfg.k if cfg.variant is Variant.I else 1.0,
        m=m,
        num_centers=len(result.centers),
        objective=result.objective,
        warnings=list(boost.warnings),
        timings=boost.timings(),
        config=cfg.to_dict(),
        boost=boost.to_dict(include_timings=False),
    )
    if data.has_labels:
        report.precision = precision(result, data)
        report.purity = purity(result, data)
    return report, result


def _run_id(index: int, instance: str, cell: str, trial: int) -> str:
    slug = re.sub(r"[^A-Za-z0-9._=-]+", "_", f"{instance}__{cell}")
    return f"{index:05d}_{slug}__t{trial:03d}"


def _failed_report(run_id: str, instance: str, cell: AlgorithmCell, trial: int, seed: int, error: str) -> EvalReport:
    report = EvalReport(
        run_id=run_id,
        instance=instance,
        algorithm=cell.name,
        cell=cell.label,
        variant=cell.variant.value,
        kind=cell.kind.value,
        trial=trial,
        seed=seed,
        m=cell.runs,
        config=cell.to_dict(),
    )
    report.fail(error)
    return report


def mean_std(values: Sequence[float]) -> tuple[float | None, float | None]:
    """Mean and sample standard deviation (0 for one value, None for none)."""
    if not values:
        return None, None
    arr = np.asarray(values, dtype=np.float64)
    std = float(np.std(arr, ddof=1)) if arr.size > 1 else 0.0
    return float(np.mean(arr)), std


def aggregate(reports: Sequence[EvalReport]) -> list[dict[str, Any]]:
    """Mean and sample standard deviation per (instance, cell) and metric, long format."""
    groups: dict[tuple[str, str], list[EvalReport]] = {}
    for r in reports:
        groups.setdefault((r.instance, r.cell), []).append(r)

    rows: list[dict[str, Any]] = []
    for (instance, cell), group in groups.items():
        ok = [r for r in group if r.status == "ok"]
        ref = ok[0] if ok else group[0]
        for metric in AGGREGATE_METRICS:
            values = [float(getattr(r, metric)) for r in ok if getattr(r, metric) is not None]
            mean, std = mean_std(values)
            rows.append(
                {
                    "instance": instance,
                    "algorithm": ref.algorithm,
                    "cell": cell,
                    "variant": ref.variant,
                    "kind": ref.kind,
                    "sample_size": ref.sample_size,
                    "extra": ref.extra,
                    "tau": ref.tau,
                    "m": ref.m,
                    "metric": metric,
                    "count": len(values),
                    "failed": len(group) - len(ok),
                    "mean": mean,
                    "std": std,
                }
            )
    return rows


def normalize_reports(reports: Sequence[EvalReport]) -> None:
    """Min-normalize objectives within each (instance, kind) group."""
    groups: dict[tuple[str, str], list[EvalReport]] = {}
    for r in reports:
        if r.status == "ok":
            groups.setdefault((r.instance, r.kind), []).append(r)
    logger = get_logger()
    for (instance, kind), group in groups.items():
        normalize_group(group)
        if group and group[0].normalization_flag:
            logger.warning(
                "group minimum objective is zero, normalized by machine epsilon", instance=instance, kind=kind
            )


def write_csv(path: Path, rows: Sequence[dict[str, Any]], columns: Sequence[str]) -> Path:
    """Write rows with a fixed column order; None becomes an empty field."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=list(columns), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({col: ("" if row.get(col) is None else row.get(col)) for col in columns})
    return path


@dataclass
class BenchResult:
    """Reports of a bench and where they were written."""

    reports: list[EvalReport]
    aggregates: list[dict[str, Any]]
    layout: ReportLayout
    manifest: RunManifest

    @property
    def failed(self) -> list[EvalReport]:
        return [r for r in self.reports if r.status != "ok"]


def run_experiment(
    plan: ExperimentPlan,
    output_dir: Path | str,
    config: Config | None = None,
    workers: int | None = None,
    show_progress: bool = True,
) -> BenchResult:
    """Execute instances x cells x trials and write the report directory.

    Seeds derive from ``plan.master_seed`` and the (instance, cell, trial) labels,
    so records do not depend on ``workers``. A failing run is recorded as
    ``status=failed`` and the plan continues.
    """
    config = config or Config()
    workers = max(1, workers if workers is not None else config.workers)
    logger = get_logger()
    layout = ReportLayout(output_dir)
    layout.create_dirs()
    manifest = RunManifest.create(plan.document, layout.root)
    manifest.save(layout.manifest_path)
    with open(layout.plan_path, "w", encoding="utf-8") as f:
        yaml.safe_dump(plan.document, f, default_flow_style=False, sort_keys=False)

    with logger.capture(layout.log_path):
        start = time.perf_counter()
        try:
            instances = [resolve_instance(entry, config, plan.master_seed) for entry in plan.instances]
            streams = DeterministicRNG(plan.master_seed)
            jobs: list[tuple[int, ResolvedInstance, AlgorithmCell, int, int]] = []
            for inst in instances:
                for cell in plan.cells:
                    for trial in range(plan.trials):
                        seed = streams.derive_seed(inst.name, cell.label, trial)
                        jobs.append((len(jobs), inst, cell, trial, seed))

            def _execute(job: tuple[int, ResolvedInstance, AlgorithmCell, int, int]) -> EvalReport:
                index, inst, cell, trial, seed = job
                run_id = _run_id(index, inst.name, cell.label, trial)
                try:
                    cfg = build_framework_config(cell, inst, seed, config)
                    report, _ = evaluate_run(
                        inst.data,
                        cfg,
                        cell.runs,
                        seed,
                        config,
                        run_id=run_id,
                        algorithm=cell.name,
                        cell=cell.label,
                        trial=trial,
                    )
                    report.instance = inst.name
                    return report
                except Exception as e:  # noqa: BLE001
                    logger.error(
                        f"run failed: {e}",
                        ctx=LogContext(dataset=inst.name, run_id=run_id, stage="bench"),
                    )
                    return _failed_report(run_id, inst.name, cell, trial, seed, f"{type(e).__name__}: {e}")

            reports: list[EvalReport] = [None] * len(jobs)  # type: ignore[list-item]
            with Progress(
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TaskProgressColumn(),
                TimeElapsedColumn(),
                disable=not show_progress,
                transient=True,
            ) as progress:
                task = progress.add_task(f"bench {plan.name}", total=len(jobs))
                if workers == 1:
                    for job in jobs:
                        reports[job[0]] = _execute(job)
                        progress.advance(task)
                else:
                    with ThreadPoolExecutor(max_workers=workers) as pool:
                        for report, job in zip(pool.map(_execute, jobs), jobs):
                            reports[job[0]] = report
                            progress.advance(task)

            normalize_reports(reports)
            for report in reports:
                report.save(layout.run_path(report.run_id))
            aggregates = aggregate(reports)
            for path in (
                write_csv(layout.records_path, [r.record() for r in reports], RECORD_COLUMNS),
                write_csv(layout.aggregates_path, aggregates, AGGREGATE_COLUMNS),
                write_csv(layout.timings_path, [r.timing_row() for r in reports], TIMING_COLUMNS),
            ):
                manifest.add_artifact(path.name)
        except Exception as e:
            manifest.fail(f"{type(e).__name__}: {e}")
            manifest.save(layout.manifest_path)
            raise

        failed = sum(1 for r in reports if r.status != "ok")
        manifest.complete(len(reports), failed, time.perf_counter() - start)
        manifest.save(layout.manifest_path)
        logger.info("bench finished", plan=plan.name, runs=len(reports), failed=failed, output=str(layout.root))
        return BenchResult(reports=reports, aggregates=aggregates, layout=layout, manifest=manifest)
