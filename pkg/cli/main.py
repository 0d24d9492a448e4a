"""Main CLI application using Typer."""

from pathlib import Path
from typing import Any, Dict, List, Optional
import json
import logging
import sys

import structlog
import typer
import yaml
from pydantic import ValidationError

from quivercanon import RunConfig
from quivercanon.config import DEFAULT_CONFIG_PATH, parse_order, parse_vector
from quivercanon.quiver import contracting_cocharacter, load_quiver, source_mutation_sequence
from quivercanon.quiver.mutation import arrow_weights
from quivercanon.suites import export_crystal_graph, export_tables, run_suite


app = typer.Typer(name="quivercanon", help="Exact canonical-basis checks for symmetric quivers")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (ValueError, OSError, yaml.YAMLError, ValidationError)


def setup_logging(verbose: bool) -> None:
    """Route stdlib log records through structlog's console renderer on stderr."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        structlog.stdlib.ProcessorFormatter(
            processor=structlog.dev.ConsoleRenderer(colors=False),
            foreign_pre_chain=[
                structlog.stdlib.add_log_level,
                structlog.stdlib.add_logger_name,
            ],
        )
    )
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.INFO)


def build_config(
    config_path: Optional[Path],
    quiver: Optional[Path] = None,
    weight: Optional[str] = None,
    weight2: Optional[str] = None,
    height: Optional[int] = None,
    order: Optional[str] = None,
    seed: Optional[int] = None,
    out: Optional[Path] = None,
    suites: Optional[List[str]] = None,
    **extra: Any,
) -> RunConfig:
    """Config file values overridden by every flag given on the command line."""
    base = RunConfig.from_yaml(config_path) if config_path is not None else RunConfig()
    overrides: Dict[str, Any] = {
        "quiver_path": quiver,
        "weight": parse_vector(weight) if weight is not None else None,
        "weight2": parse_vector(weight2) if weight2 is not None else None,
        "height": height,
        "order": parse_order(order) if order is not None else None,
        "seed": seed,
        "out_dir": out,
        "suites": list(suites) if suites else None,
    }
    overrides.update(extra)
    return base.merged(overrides)


def _input_error(e: Exception) -> typer.Exit:
    typer.echo(f"Input error: {e}", err=True)
    return typer.Exit(EXIT_INPUT_ERROR)


def _math_error(e: Exception) -> typer.Exit:
    typer.echo(f"Check failed: {e}", err=True)
    return typer.Exit(EXIT_CHECK_FAILED)


QuiverOpt = typer.Option(None, "--quiver", "-q", help="Quiver file (YAML or JSON)")
WeightOpt = typer.Option(None, "--weight", "-w", help="Dominant weight as <i, lambda> per vertex, e.g. 1,1")
Weight2Opt = typer.Option(None, "--weight2", help="Second dominant weight for L(lambda2) (x) L(lambda1)")
HeightOpt = typer.Option(None, "--height", help="Height bound on lowering contents")
OrderOpt = typer.Option(None, "--order", help="Vertex order for string data, e.g. 2,1")
SeedOpt = typer.Option(None, "--seed", help="Seed for the random corpora")
OutOpt = typer.Option(None, "--out", "-o", help="Output directory")
ConfigOpt = typer.Option(None, "--config", "-c", help="YAML run configuration")
VerboseOpt = typer.Option(False, "--verbose", "-v", help="Verbose logging")


@app.command()
def check(
    quiver: Optional[Path] = QuiverOpt,
    weight: Optional[str] = WeightOpt,
    weight2: Optional[str] = Weight2Opt,
    height: Optional[int] = HeightOpt,
    order: Optional[str] = OrderOpt,
    seed: Optional[int] = SeedOpt,
    out: Optional[Path] = OutOpt,
    config: Optional[Path] = ConfigOpt,
    suite: Optional[List[str]] = typer.Option(None, "--suite", "-s", help="Suite to run (repeatable)"),
    verbose: bool = VerboseOpt,
):
    """Run the selected check suites and write JSON reports."""
    setup_logging(verbose)
    try:
        run_config = build_config(config, quiver, weight, weight2, height, order, seed, out, suite)
        report = run_suite(run_config)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    except RuntimeError as e:
        raise _math_error(e)

    for result in report.suites:
        status = "PASS" if result.passed else "FAIL"
        extra = " (degraded)" if result.degraded else ""
        typer.echo(f"{status} {result.suite}: {len(result.entries) - len(result.failures)}/{len(result.entries)}{extra}")
        for failure in result.failures[:5]:
            typer.echo(f"     {failure.check} at {failure.content}: {failure.detail}")
    typer.echo(f"Reports written to {run_config.out_dir}")
    raise typer.Exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


@app.command()
def crystal(
    quiver: Optional[Path] = QuiverOpt,
    weight: Optional[str] = WeightOpt,
    height: Optional[int] = HeightOpt,
    order: Optional[str] = OrderOpt,
    out: Optional[Path] = OutOpt,
    config: Optional[Path] = ConfigOpt,
    verbose: bool = VerboseOpt,
):
    """Export the crystal graph as DOT text and JSON."""
    setup_logging(verbose)
    try:
        run_config = build_config(config, quiver, weight, None, height, order, None, out)
        graph = export_crystal_graph(run_config)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    except RuntimeError as e:
        raise _math_error(e)
    typer.echo(f"Crystal graph: {len(graph.nodes)} nodes, {len(graph.edges)} edges -> {run_config.out_dir}/crystal.dot")


@app.command()
def tables(
    quiver: Optional[Path] = QuiverOpt,
    weight: Optional[str] = WeightOpt,
    height: Optional[int] = HeightOpt,
    order: Optional[str] = OrderOpt,
    out: Optional[Path] = OutOpt,
    config: Optional[Path] = ConfigOpt,
    verbose: bool = VerboseOpt,
):
    """Export the weight-dimension table and the transition matrices as CSV."""
    setup_logging(verbose)
    try:
        run_config = build_config(config, quiver, weight, None, height, order, None, out)
        rows = export_tables(run_config)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    except RuntimeError as e:
        raise _math_error(e)
    for row in rows:
        if row.dimension:
            typer.echo(f"{tuple(row.content)}: dim {row.dimension}")
    typer.echo(f"Tables written to {run_config.out_dir}")


@app.command()
def mutate(
    quiver: Path = typer.Option(..., "--quiver", "-q", help="Quiver file (YAML or JSON)"),
    target: str = typer.Option(..., "--target", "-t", help="Vertex to turn into a source"),
    verbose: bool = VerboseOpt,
):
    """Print the mutation-to-source sequence and its contracting cocharacter."""
    setup_logging(verbose)
    try:
        base, _, _ = load_quiver(quiver)
        sequence = source_mutation_sequence(base, target)
        cocharacter = contracting_cocharacter(base, sequence)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    result = {
        "target": target,
        "sequence": sequence,
        "cocharacter": cocharacter.as_dict(),
        "arrow_weights": [[f"{s}->{t}", w] for (s, t), w in arrow_weights(base, cocharacter)],
    }
    typer.echo(json.dumps(result, indent=2, sort_keys=True))


@app.command()
def init(
    config: Path = typer.Option(DEFAULT_CONFIG_PATH, "--config", "-c", help="Where to write the configuration"),
):
    """Write a default run configuration, or show the existing one."""
    setup_logging(False)
    try:
        run_config = RunConfig.load_or_create(config)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    typer.echo(f"Configuration at {config}:")
    for key, value in run_config.to_dict().items():
        typer.echo(f"   {key}: {value}")


@app.command()
def signs(
    samples: int = typer.Option(1000, "--samples", "-n", help="Number of random framed quivers"),
    seed: Optional[int] = SeedOpt,
    out: Optional[Path] = OutOpt,
    config: Optional[Path] = ConfigOpt,
    verbose: bool = VerboseOpt,
):
    """Compare psi-twists with the Nakajima signs on a seeded random corpus."""
    setup_logging(verbose)
    try:
        run_config = build_config(config, seed=seed, out=out, suites=["signs"], sign_samples=samples)
        report = run_suite(run_config)
    except INPUT_ERRORS as e:
        raise _input_error(e)
    result = report.suites[0]
    typer.echo(f"{'PASS' if result.passed else 'FAIL'} signs: {samples} samples, seed {run_config.seed}")
    raise typer.Exit(EXIT_OK if report.passed else EXIT_CHECK_FAILED)


if __name__ == "__main__":
    app()
