"""Evaluation metrics, bench orchestration and reporting."""

from sampleclust.harness.compare import Comparison, compare, load_reports
from sampleclust.harness.metrics import normalize_group, normalize_values, precision, purity
from sampleclust.harness.plan import AlgorithmCell, ExperimentPlan, InstanceEntry
from sampleclust.harness.report import EvalReport
from sampleclust.harness.runner import (
    BenchResult,
    ResolvedInstance,
    aggregate,
    build_framework_config,
    evaluate_run,
    resolve_instance,
    run_experiment,
)

__all__ = [
    "AlgorithmCell",
    "BenchResult",
    "Comparison",
    "EvalReport",
    "ExperimentPlan",
    "InstanceEntry",
    "ResolvedInstance",
    "aggregate",
    "build_framework_config",
    "compare",
    "evaluate_run",
    "load_reports",
    "normalize_group",
    "normalize_values",
    "precision",
    "purity",
    "resolve_instance",
    "run_experiment",
]
