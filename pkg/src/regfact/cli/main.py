"""Command-line interface for regfact."""

import sys
from pathlib import Path
from typing import Any, Callable, NoReturn, Optional

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from regfact import __version__
from regfact.config import Settings, get_settings, set_settings
from regfact.constructions import Construction, build_construction
from regfact.core.errors import (
    ArtifactFormatError,
    ConstructionIntegrityError,
    ContractViolationError,
    UnsupportedParameterError,
)
from regfact.core.models import VerificationReport
from regfact.graph.edges import format_edges
from regfact.groups.family import FamilyKind, family_of, format_element
from regfact.io import (
    construction_document,
    dumps,
    figure_to_dot,
    loads,
    search_document,
    summary,
    trees_to_dot,
    trees_to_edgelist,
    verify_document,
)
from regfact.logging import bind_instance, get_logger, setup_logging
from regfact.oracle import SearchBudget, exhaustive_starter_search

# diagnostics on stderr, artifacts on stdout
console = Console(stderr=True)
stdout = Console()
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTEGRITY = 3

FORMATS = ("json", "dot", "edgelist", "summary")


def _fail(message: str, code: int) -> NoReturn:
    console.print(f"[red]Error:[/red] {message}")
    sys.exit(code)


def _family_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option(
        "--param", "-p", type=int, required=True, help="s for dicyclic, n for the other families"
    )(func)
    func = click.option(
        "--family",
        "-f",
        type=click.Choice([k.value for k in FamilyKind], case_sensitive=False),
        required=True,
        help="Group family",
    )(func)
    return func


def _output_options(func: Callable[..., Any]) -> Callable[..., Any]:
    func = click.option("--quiet", "-q", is_flag=True, help="Only write the artifact")(func)
    func = click.option(
        "--out", "-o", type=click.Path(dir_okay=False), help="Write to file instead of stdout"
    )(func)
    return func


def _build(family: str, param: int) -> Construction:
    """Guard the parameter, then build; maps failures onto exit codes."""
    settings = get_settings()
    bind_instance(family, param)
    try:
        family_of(family, param, settings.limits.max_order)
        return build_construction(family, param)
    except UnsupportedParameterError as exc:
        _fail(str(exc), EXIT_USAGE)
    except ConstructionIntegrityError as exc:
        logger.error("construction_failed", error=str(exc))
        if exc.report is not None:
            _print_report(exc.report)
        _fail(str(exc), EXIT_INTEGRITY)


def _write(text: str, out: Optional[str], quiet: bool) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        if not quiet:
            console.print(f"[green]✓ Wrote {out}[/green]")
    else:
        click.echo(text, nl=False)


def _print_report(report: VerificationReport) -> None:
    table = Table(title=report.subject)
    table.add_column("Condition", style="cyan")
    table.add_column("Where", style="yellow")
    table.add_column("Message")
    table.add_column("Witnesses", style="dim")
    for v in report.violations:
        where = ""
        if v.block is not None:
            where = f"block {v.block}"
        elif v.tree is not None:
            where = f"tree {v.tree}"
        table.add_row(v.condition.value, where, v.message, ", ".join(v.witnesses[:4]))
    console.print(table)


@click.group()
@click.version_option(version=__version__)
@click.option("--config", type=click.Path(exists=True, dir_okay=False), help="Configuration file path")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def cli(config: Optional[str], verbose: bool) -> None:
    """regfact - G-regular 1-factorizations of K_2n and complete sets of rainbow spanning trees.

    Every command rebuilds or re-reads its objects and certifies them before
    reporting success.
    """
    if config:
        set_settings(Settings.from_yaml(Path(config)))
    setup_logging("DEBUG" if verbose else None)


@cli.command()
@_family_options
@click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True
)
@_output_options
def generate(family: str, param: int, fmt: str, out: Optional[str], quiet: bool) -> None:
    """Build a starter, its 1-factorization and a certified complete set of rainbow trees.

    Examples:
        regfact generate --family dicyclic --param 2
        regfact generate --family semidihedral --param 16 --format dot -o sd32.dot
    """
    construction = _build(family, param)
    if fmt == "json":
        text = dumps(construction_document(construction))
    elif fmt == "dot":
        text = trees_to_dot(construction.trees, construction.factorization)
    elif fmt == "edgelist":
        text = trees_to_edgelist(construction)
    else:
        text = summary(construction)
    _write(text, out, quiet)

    if not quiet:
        G = construction.group
        console.print(
            f"[green]✓ {G.label}[/green]: |G|={G.order}, "
            f"{len(construction.factorization.factors)} factors, "
            f"{len(construction.trees.trees)} rainbow spanning trees"
        )


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON on stdout")
@click.option("--quiet", "-q", is_flag=True, help="Only set the exit status")
def verify(path: str, as_json: bool, quiet: bool) -> None:
    """Re-check an exported JSON artifact from first principles.

    Exit status: 0 when every check passes, 1 when one fails, 2 when the file
    cannot be parsed.
    """
    settings = get_settings()
    try:
        doc = loads(Path(path).read_text(encoding="utf-8"))
        report = verify_document(doc, settings.limits.max_order)
    except (ArtifactFormatError, UnsupportedParameterError) as exc:
        _fail(str(exc), EXIT_USAGE)
    except ConstructionIntegrityError as exc:
        _fail(str(exc), EXIT_INTEGRITY)

    if as_json:
        click.echo(report.model_dump_json(indent=2))
    if report.passed:
        if not quiet:
            console.print(
                f"[bold green]✓ {report.subject}: {len(report.checked)} condition(s) hold[/bold green]"
            )
        sys.exit(EXIT_OK)

    if not quiet:
        _print_report(report)
        ids = ", ".join(sorted(c.value for c in report.violated_conditions()))
        console.print(f"[bold red]✗ violated: {ids}[/bold red]")
    sys.exit(EXIT_CHECK_FAILED)


@cli.command()
@_family_options
@click.option("--max-nodes", type=int, help="Backtracking node cap (default from settings)")
@_output_options
def search(family: str, param: int, max_nodes: Optional[int], out: Optional[str], quiet: bool) -> None:
    """Exhaustively search small groups for starters and write them as JSON."""
    settings = get_settings()
    bind_instance(family, param)
    try:
        G = family_of(family, param, settings.limits.max_order)
        budget = SearchBudget.from_settings(settings.search)
        if max_nodes is not None:
            budget = budget.model_copy(update={"max_nodes": max_nodes})
        result = exhaustive_starter_search(G, budget)
    except (UnsupportedParameterError, ContractViolationError) as exc:
        _fail(str(exc), EXIT_USAGE)

    _write(dumps(search_document(G, result)), out, quiet)
    if not quiet:
        status = "complete" if result.complete else "[yellow]incomplete (node budget spent)[/yellow]"
        console.print(
            f"{G.label}: {len(result.starters)} starter(s) after {result.nodes} node(s), {status}"
        )


@cli.command()
@_family_options
def info(family: str, param: int) -> None:
    """Show the group and the blocks of its starter."""
    construction = _build(family, param)
    G = construction.group
    starter = construction.starter

    stdout.print(
        Panel.fit(
            f"[bold cyan]{G.label}[/bold cyan]\n"
            f"Order: {G.order}  (K_{G.order})\n"
            f"Involutions: {', '.join(format_element(g) for g in G.involutions())}\n"
            f"Factors: {len(construction.factorization.factors)}  "
            f"Trees: {len(construction.trees.trees)}",
            border_style="cyan",
        )
    )
    table = Table(title="Starter blocks")
    table.add_column("Block", style="cyan")
    table.add_column("Edges")
    table.add_column("|H|", justify="right", style="magenta")
    table.add_column("Factors", justify="right", style="magenta")
    for i, blk in enumerate(starter.blocks):
        table.add_row(
            blk.label or str(i),
            " ".join(format_edges(blk.edges)),
            str(blk.stabilizer.order),
            str(starter.factor_count(i)),
        )
    stdout.print(table)


@cli.command()
@_family_options
@_output_options
def figure(family: str, param: int, out: Optional[str], quiet: bool) -> None:
    """Write R + e1 and R*j + e2 as DOT, styled by component with the bridge in red."""
    construction = _build(family, param)
    _write(figure_to_dot(construction.lemma_input), out, quiet)


def main() -> None:
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
