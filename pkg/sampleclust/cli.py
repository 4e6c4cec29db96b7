"""CLI entrypoint for sampleclust."""

from __future__ import annotations

import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from sampleclust import __version__
from sampleclust.config import Config, load_config
from sampleclust.core.objective import objective_with_outliers
from sampleclust.core.types import OUTLIER, CenterSet, ClusteringResult, Dataset, ObjectiveKind
from sampleclust.datagen.instances import generate, load_spec
from sampleclust.datagen.io import load_memberships, load_points, save_memberships, save_points, write_metadata
from sampleclust.datagen.synthetic import SyntheticSpec
from sampleclust.errors import InputError
from sampleclust.harness.compare import compare as compare_reports
from sampleclust.harness.metrics import precision, purity
from sampleclust.harness.plan import AlgorithmCell, ExperimentPlan, InstanceEntry
from sampleclust.harness.runner import build_framework_config, evaluate_run, resolve_instance, run_experiment
from sampleclust.logging import configure_logging, get_logger
from sampleclust.sampler.params import Variant

console = Console()

EXIT_INPUT_ERROR = 1
EXIT_RUNTIME_ERROR = 2


class SclustGroup(click.Group):
    """Click group mapping errors to exit codes: 1 for bad input, 2 for runtime failures."""

    def main(  # type: ignore[override]
        self,
        args: list[str] | None = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_INPUT_ERROR)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INPUT_ERROR)
        except InputError as e:
            get_logger().error(str(e))
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
        except Exception as e:  # noqa: BLE001
            get_logger().error(f"{type(e).__name__}: {e}")
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            sys.exit(EXIT_RUNTIME_ERROR)
        sys.exit(rv if isinstance(rv, int) else 0)


def _config(ctx: click.Context) -> Config:
    return ctx.obj["config"]


@click.group(cls=SclustGroup)
@click.version_option(version=__version__, prog_name="sclust")
@click.option("-v", "--verbose", count=True, help="Increase verbosity")
@click.option("-q", "--quiet", is_flag=True, help="Suppress non-error output")
@click.option(
    "--log-format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Log output format",
)
@click.option("--log-file", type=click.Path(), help="Write JSON-lines logs to file")
@click.option("-c", "--config", "config_path", type=click.Path(exists=True), help="Config file path")
@click.pass_context
def main(
    ctx: click.Context,
    verbose: int,
    quiet: bool,
    log_format: str,
    log_file: str | None,
    config_path: str | None,
) -> None:
    """sampleclust - clustering with outliers via uniform sampling."""
    ctx.ensure_object(dict)
    level = logging.WARNING if quiet else (logging.DEBUG if verbose else logging.INFO)
    configure_logging(level=level, format_type=log_format, log_file=log_file)  # type: ignore[arg-type]
    ctx.obj["quiet"] = quiet
    ctx.obj["config"] = load_config(config_path)


@main.command()
@click.argument("spec", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--out", required=True, type=click.Path(dir_okay=False), help="Output point file")
@click.option("--seed", type=int, default=None, help="Override the spec seed (synthetic only)")
@click.option("--format", "fmt", type=click.Choice(["csv", "npz"]), default=None, help="Point file format")
@click.pass_context
def gen(ctx: click.Context, spec: str, out: str, seed: int | None, fmt: str | None) -> None:
    """Generate a synthetic or adversarial dataset from a YAML spec file."""
    instance_spec = load_spec(spec)
    if seed is not None and isinstance(instance_spec, SyntheticSpec):
        instance_spec = dataclasses.replace(instance_spec, seed=seed)
    data, truth, metadata = generate(instance_spec, _config(ctx).datagen)
    path = save_points(data, out, fmt)
    sidecar = write_metadata(path, metadata)
    get_logger().info("dataset written", path=str(path), n=data.n, dim=data.dim)
    if not ctx.obj["quiet"]:
        significance = metadata["significance"]
        console.print(f"[bold]Generated:[/bold] {path} ({data.n} points in R^{data.dim})")
        console.print(f"  Outliers: {truth.outlier_count}")
        console.print(f"  epsilon1={significance['epsilon1']:.4g} epsilon2={significance['epsilon2']:.4g}")
        console.print(f"  Metadata: {sidecar}")


@main.command()
@click.argument("data_path", metavar="DATA", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(["I", "II"]), default="I", help="Extra centers (I) or extra outliers (II)")
@click.option(
    "--objective",
    type=click.Choice([kind.value for kind in ObjectiveKind]),
    default="means",
    help="Objective kind",
)
@click.option("-k", type=int, default=None, help="Number of clusters (default: from labels)")
@click.option("-z", type=int, default=None, help="Number of outliers (default: from labels)")
@click.option("--sample-size", default=None, help="Sample size: absolute, fraction, or '2%n'")
@click.option("--extra", type=int, default=None, help="Extra centers k' (I) or sample outliers z' (II)")
@click.option("--tau", type=float, default=None, help="Center ratio (k + k') / k for variant I")
@click.option("--outlier-ratio", type=float, default=None, help="z' over the expected sample outliers (II)")
@click.option("--eta", type=float, default=None, help="Failure probability; selects theory-driven sizes")
@click.option("--delta", type=float, default=0.5, help="Concentration slack (theory mode)")
@click.option("--xi", type=float, default=0.1, help="Sampling slack (theory mode)")
@click.option("--runs", type=int, default=1, help="Independent runs m, best one selected")
@click.option("--solver", default=None, help="Subroutine name (registry)")
@click.option("--seed", type=int, default=None, help="Base seed (default: config seed)")
@click.option("--format", "fmt", type=click.Choice(["csv", "npz"]), default=None, help="Point file format")
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write the JSON report here")
@click.option("--memberships", type=click.Path(dir_okay=False), help="Write per-point memberships here")
@click.option("--centers", type=click.Path(dir_okay=False), help="Write the centers here")
@click.pass_context
def run(
    ctx: click.Context,
    data_path: str,
    variant: str,
    objective: str,
    k: int | None,
    z: int | None,
    sample_size: str | None,
    extra: int | None,
    tau: float | None,
    outlier_ratio: float | None,
    eta: float | None,
    delta: float,
    xi: float,
    runs: int,
    solver: str | None,
    seed: int | None,
    fmt: str | None,
    out: str | None,
    memberships: str | None,
    centers: str | None,
) -> None:
    """Run one algorithm configuration on one dataset."""
    config = _config(ctx)
    seed = config.seed if seed is None else seed
    if eta is None and sample_size is None:
        raise click.UsageError("give --sample-size, or --eta for theory-driven sizes")
    entry = InstanceEntry(name=Path(data_path).stem, path=Path(data_path), fmt=fmt, k=k, z=z)
    instance = resolve_instance(entry, config, seed)
    cell = AlgorithmCell(
        name="run",
        label="run",
        variant=Variant.parse(variant),
        kind=ObjectiveKind.parse(objective),
        solver=solver,
        sample_size=sample_size,
        extra=extra,
        tau=tau,
        outlier_ratio=outlier_ratio,
        runs=runs,
        theory={"eta": eta, "delta": delta, "xi": xi} if eta is not None else None,
    )
    cfg = build_framework_config(cell, instance, seed, config)
    report, result = evaluate_run(instance.data, cfg, runs, seed, config)

    if out:
        report.save(out)
    if memberships:
        save_memberships(result.memberships, memberships)
    if centers:
        save_points(Dataset(points=result.centers.centers, name="centers"), centers)
    if not ctx.obj["quiet"]:
        _print_run(report.to_dict(), result)


def _print_run(report: dict[str, Any], result: ClusteringResult) -> None:
    table = Table(title=f"{report['instance']} ({report['variant']}, {report['kind']})")
    table.add_column("field")
    table.add_column("value", justify="right")
    for key in ("n", "k", "z", "sample_size", "extra", "m", "num_centers", "objective", "precision", "purity"):
        value = report.get(key)
        table.add_row(key, "-" if value is None else (f"{value:.6g}" if isinstance(value, float) else str(value)))
    for phase, seconds in report["timings"].items():
        table.add_row(f"time.{phase}", f"{seconds:.3f}s")
    console.print(table)
    for warning in report["warnings"]:
        console.print(f"[yellow]warning:[/yellow] {warning}")
    console.print(f"Outliers discarded: {result.outlier_count}")


@main.command(name="eval")
@click.argument("data_path", metavar="DATA", type=click.Path(exists=True, dir_okay=False))
@click.argument("memberships_path", metavar="MEMBERSHIPS", type=click.Path(exists=True, dir_okay=False))
@click.option("--centers", type=click.Path(exists=True, dir_okay=False), help="Center file for the objective")
@click.option(
    "--objective",
    type=click.Choice([kind.value for kind in ObjectiveKind]),
    default="means",
    help="Objective kind (with --centers)",
)
@click.option("--format", "fmt", type=click.Choice(["csv", "npz"]), default=None, help="Point file format")
@click.option("-o", "--out", type=click.Path(dir_okay=False), help="Write metrics as JSON")
@click.pass_context
def eval_(
    ctx: click.Context,
    data_path: str,
    memberships_path: str,
    centers: str | None,
    objective: str,
    fmt: str | None,
    out: str | None,
) -> None:
    """Recompute metrics from a dataset and a membership file."""
    data = load_points(data_path, fmt)
    labels = load_memberships(memberships_path)
    if labels.shape[0] != data.n:
        raise InputError(f"{memberships_path}: {labels.shape[0]} memberships for {data.n} points")
    z = int((labels == OUTLIER).sum())
    metrics: dict[str, Any] = {"n": data.n, "outliers": z, "precision": None, "purity": None, "objective": None}
    if data.has_labels:
        metrics["precision"] = precision(labels, data)
        metrics["purity"] = purity(labels, data)
    if centers:
        center_set = CenterSet(load_points(centers, labels=False).points)
        metrics["objective"] = objective_with_outliers(data, center_set, z, objective)

    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            json.dump(metrics, f, indent=2)
    if not ctx.obj["quiet"]:
        for key, value in metrics.items():
            console.print(f"  {key}: {'-' if value is None else value}")


@main.command()
@click.argument("plan_path", metavar="PLAN", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "-o",
    "--out",
    type=click.Path(file_okay=False),
    default=None,
    help="Report directory (default: <output_dir>/<plan name> from the config)",
)
@click.option("--trials", type=int, default=None, help="Override the plan's trial count")
@click.option("--seed", type=int, default=None, help="Override the plan's master seed")
@click.option("-j", "--workers", type=int, default=None, help="Parallel workers (default: config)")
@click.pass_context
def bench(
    ctx: click.Context,
    plan_path: str,
    out: str | None,
    trials: int | None,
    seed: int | None,
    workers: int | None,
) -> None:
    """Execute a bench plan and write the report directory."""
    plan = ExperimentPlan.from_yaml(plan_path)
    if trials is not None:
        if trials < 1:
            raise click.BadParameter("must be >= 1", param_hint="--trials")
        plan.trials = trials
        plan.document["trials"] = trials
    if seed is not None:
        plan.master_seed = seed
        plan.document["master_seed"] = seed
    if out is None:
        output_dir = _config(ctx).output_dir
        if output_dir is None:
            raise click.UsageError("Missing option '-o' / '--out' and no output_dir in the config")
        out = str(Path(output_dir) / plan.name)

    quiet = ctx.obj["quiet"]
    if not quiet:
        console.print(f"[bold]Bench:[/bold] {plan.name} ({plan.run_count} runs)")
    result = run_experiment(plan, out, _config(ctx), workers=workers, show_progress=not quiet)
    if not quiet:
        console.print(f"  Output: {result.layout.root}")
        if result.failed:
            console.print(f"  [red]{len(result.failed)} failed run(s)[/red]")
        else:
            console.print("  [green]All runs completed[/green]")


@main.command()
@click.argument("report_dir", metavar="DIR", type=click.Path(exists=True, file_okay=False))
@click.pass_context
def compare(ctx: click.Context, report_dir: str) -> None:
    """Normalize and tabulate a bench report directory."""
    comparison = compare_reports(report_dir)
    if not ctx.obj["quiet"]:
        console.print(comparison.to_table())
        console.print(f"Written: {comparison.path}")


if __name__ == "__main__":
    main()
