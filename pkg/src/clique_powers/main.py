"""
Command-line interface: generators, powers, complexes, homology, validators and the table.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage errors,
unmet hypotheses and exhausted resource ceilings.
"""

import asyncio
import csv
import io
import json
from enum import Enum
from pathlib import Path
from typing import Any

import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from .config import settings, setup_logging
from .core.complex import SimplicialComplex, clique_complex, independence_complex
from .core.file_manager import (
    AsyncFileManager,
    dumps,
    format_edge_list,
    format_facet_list,
    read_complex,
    read_graph,
    reports_document,
)
from .core.graph import Graph, power
from .core.homology import compute_profile, independence_profile
from .core.suite import TheoremSuite, overall_verdict
from .exceptions import CliquePowersError, InputError
from .families import FAMILY_NAMES, PRNG_ALGORITHM, build_family
from .predictions import prediction_table
from .theorems import REGISTRY, CheckRequest, resolve, table_cell
from .types import SCHEMA_VERSION, ComplexKind, HomologyTier, OutputFormat, TableCell, TheoremReport, Verdict
from .validation import validate_document

app = typer.Typer(
    name="clique-powers",
    help="Exact topology of clique complexes of graph powers",
    add_completion=False,
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

EXIT_CODES = {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.RESOURCE: 2}


class GraphFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


@app.callback()
def _configure(verbose: bool = typer.Option(False, "--verbose", help="Log at DEBUG level to stderr")) -> None:
    setup_logging("DEBUG" if verbose else None)


def parse_range(value: str | None) -> list[int]:
    """'3..20', '2,4,6' or '7'."""
    if not value:
        return []
    values: list[int] = []
    try:
        for part in value.split(","):
            if ".." in part:
                low, high = part.split("..", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise InputError(f"cannot parse range '{value}'; use forms like 3..20, 2,4,6 or 7") from None
    return values


def _fail(error: CliquePowersError) -> typer.Exit:
    err_console.print(f"[red]error:[/red] {error}", highlight=False)
    return typer.Exit(2)


def _resolve_graph(
    family: str | None,
    params: list[int] | None,
    input_path: Path | None,
    complex_input: Path | None,
    seed: int,
    p: float,
) -> Graph | None:
    if family:
        base = read_graph(input_path) if input_path else None
        base_complex = read_complex(complex_input) if complex_input else None
        return build_family(family, params or [], base=base, base_complex=base_complex, seed=seed, p=p)
    if params:
        raise InputError("positional parameters need --family")
    return read_graph(input_path) if input_path else None


def _require(graph: Graph | None) -> Graph:
    if graph is None:
        raise InputError("give a graph with --family NAME [PARAMS] or --input FILE")
    return graph


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info(f"wrote {output}")


def _graph_output(graph: Graph, fmt: GraphFormat, metadata: dict[str, Any]) -> str:
    if fmt == GraphFormat.JSON:
        document = {"schema_version": SCHEMA_VERSION, "vertex_count": graph.vertex_count, "edges": [list(e) for e in graph.edge_list()]}
        validate_document("graph", document)
        return dumps(document) + "\n"
    return format_edge_list(graph, metadata)


FAMILY_HELP = f"Graph family: {', '.join(FAMILY_NAMES)}"


@app.command()
def gen(
    family: str = typer.Argument(..., help=FAMILY_HELP),
    params: list[int] = typer.Argument(None, help="Integer parameters of the family"),
    input_path: Path | None = typer.Option(None, "--input", help="Edge list for line, subdiv and total"),
    complex_input: Path | None = typer.Option(None, "--complex-input", help="Facet list for gss"),
    seed: int = typer.Option(0, "--seed", help="Seed for random and tree"),
    p: float = typer.Option(0.5, "--p", help="Edge probability for random"),
    output: Path | None = typer.Option(None, "--output", help="Write here instead of stdout"),
    fmt: GraphFormat = typer.Option(GraphFormat.TEXT, "--format"),
) -> None:
    """Generate a graph of a named family as an edge list."""
    try:
        graph = _require(_resolve_graph(family, params, input_path, complex_input, seed, p))
        metadata: dict[str, Any] = {"family": family, "params": " ".join(map(str, params or []))}
        if family in ("random", "tree"):
            metadata.update({"seed": seed, "prng": PRNG_ALGORITHM})
        if family == "random":
            metadata["p"] = p
        _emit(_graph_output(graph, fmt, metadata), output)
    except CliquePowersError as e:
        raise _fail(e) from e


@app.command("power")
def power_command(
    params: list[int] = typer.Argument(None, help="Parameters of --family"),
    r: int = typer.Option(..., "--r", help="Exponent of the power"),
    family: str | None = typer.Option(None, "--family", help=FAMILY_HELP),
    input_path: Path | None = typer.Option(None, "--input", help="Edge list of the graph"),
    seed: int = typer.Option(0, "--seed"),
    p: float = typer.Option(0.5, "--p"),
    output: Path | None = typer.Option(None, "--output"),
    fmt: GraphFormat = typer.Option(GraphFormat.TEXT, "--format"),
) -> None:
    """Emit the r-th power of a graph."""
    try:
        graph = _require(_resolve_graph(family, params, input_path, None, seed, p))
        _emit(_graph_output(power(graph, r), fmt, {"power": r}), output)
    except CliquePowersError as e:
        raise _fail(e) from e


def _build_complex(graph: Graph, r: int, kind: ComplexKind) -> SimplicialComplex:
    powered = power(graph, r)
    return clique_complex(powered) if kind == ComplexKind.CLIQUE else independence_complex(powered)


@app.command("complex")
def complex_command(
    params: list[int] = typer.Argument(None, help="Parameters of --family"),
    family: str | None = typer.Option(None, "--family", help=FAMILY_HELP),
    input_path: Path | None = typer.Option(None, "--input"),
    r: int = typer.Option(1, "--power", help="Build the complex of the r-th power"),
    kind: ComplexKind = typer.Option(ComplexKind.CLIQUE, "--complex"),
    seed: int = typer.Option(0, "--seed"),
    p: float = typer.Option(0.5, "--p"),
    output: Path | None = typer.Option(None, "--output"),
    fmt: GraphFormat = typer.Option(GraphFormat.TEXT, "--format"),
) -> None:
    """Print the facets of cl(G^r) or ind(G^r)."""
    try:
        graph = _require(_resolve_graph(family, params, input_path, None, seed, p))
        cx = _build_complex(graph, r, kind)
        if fmt == GraphFormat.JSON:
            document = {
                "schema_version": SCHEMA_VERSION,
                "vertex_count": cx.vertex_count,
                "f_vector": list(cx.f_vector),
                "facets": [list(f) for f in cx.facets],
            }
            validate_document("complex", document)
            text = dumps(document) + "\n"
        else:
            text = format_facet_list(cx, {"complex": kind.value, "power": r})
        _emit(text, output)
    except CliquePowersError as e:
        raise _fail(e) from e


@app.command()
def homology(
    params: list[int] = typer.Argument(None, help="Parameters of --family"),
    family: str | None = typer.Option(None, "--family", help=FAMILY_HELP),
    input_path: Path | None = typer.Option(None, "--input", help="Edge list of the graph"),
    complex_input: Path | None = typer.Option(
        None, "--complex-input", help="Facet list; the complex itself unless --family gss uses it as base"
    ),
    r: int = typer.Option(1, "--power"),
    kind: ComplexKind = typer.Option(ComplexKind.CLIQUE, "--complex"),
    tier: HomologyTier = typer.Option(HomologyTier.AUTO, "--tier"),
    seed: int = typer.Option(0, "--seed"),
    p: float = typer.Option(0.5, "--p"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
) -> None:
    """Reduced integer homology of cl(G^r), ind(G^r) or a facet-list complex."""
    try:
        graph = _resolve_graph(family, params, input_path, complex_input, seed, p)
        if graph is None and complex_input is not None:
            result = compute_profile(read_complex(complex_input), tier)
        elif kind == ComplexKind.INDEPENDENCE:
            result = independence_profile(power(_require(graph), r), tier)
        else:
            result = compute_profile(clique_complex(power(_require(graph), r)), tier)
    except CliquePowersError as e:
        raise _fail(e) from e

    profile = result.profile
    if fmt == OutputFormat.JSON:
        document = {
            "schema_version": SCHEMA_VERSION,
            "profile": profile.model_dump(),
            "tier": result.tier.value,
            "faces": result.faces,
            "rendered": profile.render(),
        }
        validate_document("profile", document)
        typer.echo(dumps(document))
    elif fmt == OutputFormat.CSV:
        typer.echo("dimension,betti,torsion")
        for d in range(-1, len(profile.betti)):
            typer.echo(f"{d},{profile.betti_at(d)},{'x'.join(map(str, profile.torsion_at(d)))}")
    else:
        typer.echo(f"betti: {list(profile.betti)}")
        if profile.betti_minus_one:
            typer.echo(f"betti_minus_one: {profile.betti_minus_one}")
        if not profile.is_torsion_free:
            typer.echo(f"torsion: {[list(t) for t in profile.torsion]}")
        typer.echo(f"type: {profile.render()}")
        typer.echo(f"tier: {result.tier.value}")
        typer.echo(f"faces: {result.faces}")


def _run_jobs(jobs: list, workers: int | None) -> tuple[list[TheoremReport], dict[str, Any]]:
    suite = TheoremSuite(max_concurrent=workers)
    reports = suite.run_sync(jobs)
    summary = suite.get_summary()
    logger.debug(f"metrics: {summary}")
    return reports, summary


def _save(name: str | None, reports: list[TheoremReport], metrics: dict[str, Any] | None) -> None:
    if name:
        manager = AsyncFileManager(Path(settings.results_dir))
        asyncio.run(manager.save_reports(name, reports, metrics))


def _print_reports(reports: list[TheoremReport]) -> None:
    table = Table(title="Reports")
    table.add_column("theorem")
    table.add_column("parameters")
    table.add_column("verdict")
    table.add_column("evidence")
    colours = {"pass": "green", "fail": "red", "resource": "yellow"}
    for report in reports:
        verdict = str(report.verdict)
        table.add_row(
            report.theorem,
            json.dumps(report.parameters, sort_keys=True),
            f"[{colours[verdict]}]{verdict}[/{colours[verdict]}]",
            json.dumps(report.evidence if report.passed else report.counterexample, sort_keys=True)[:120],
        )
    console.print(table)
    counts = {v.value: sum(1 for r in reports if r.verdict == v.value) for v in Verdict}
    console.print(f"{len(reports)} reports: " + ", ".join(f"{n} {v}" for v, n in counts.items()), highlight=False)


@app.command()
def check(
    theorem: str = typer.Argument(None, help="Theorem id; see --list"),
    params: list[int] = typer.Argument(None, help="Parameters of --family"),
    list_ids: bool = typer.Option(False, "--list", help="List theorem ids and exit"),
    family: str | None = typer.Option(None, "--family", help=FAMILY_HELP),
    input_path: Path | None = typer.Option(None, "--input", help="Edge list of the graph"),
    complex_input: Path | None = typer.Option(None, "--complex-input", help="Facet list of K"),
    n: str | None = typer.Option(None, "--n", help="Range such as 3..20"),
    r: str | None = typer.Option(None, "--r"),
    k: str | None = typer.Option(None, "--k"),
    m: str | None = typer.Option(None, "--m"),
    s: str | None = typer.Option(None, "--s"),
    u: int | None = typer.Option(None, "--u"),
    v: int | None = typer.Option(None, "--v"),
    vertex: int | None = typer.Option(None, "--vertex"),
    sequence: str | None = typer.Option(None, "--sequence", help="Comma-separated vertices"),
    samples: int | None = typer.Option(None, "--samples"),
    seed: int = typer.Option(0, "--seed"),
    p: float = typer.Option(0.5, "--p"),
    tier: HomologyTier = typer.Option(HomologyTier.AUTO, "--tier"),
    workers: int | None = typer.Option(None, "--workers", help="Concurrent report jobs"),
    fmt: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
    metrics: bool = typer.Option(False, "--metrics", help="Include run metrics in JSON output"),
    save: str | None = typer.Option(None, "--save", help="Also save the JSON reports under the results directory"),
) -> None:
    """Run a validator and report pass/fail per instance."""
    if list_ids:
        for entry in REGISTRY.values():
            typer.echo(f"{entry.theorem:<18} {entry.summary}")
        return
    try:
        if theorem is None:
            raise InputError(f"missing theorem id; available: {', '.join(REGISTRY)}")
        entry = resolve(theorem)
        graph = _resolve_graph(family, params, input_path, None, seed, p)
        request = CheckRequest(
            graph=graph,
            base=read_complex(complex_input) if complex_input else None,
            n=parse_range(n),
            r=parse_range(r),
            k=parse_range(k),
            m=parse_range(m),
            s=parse_range(s),
            u=u,
            v=v,
            vertex=vertex,
            sequence=parse_range(sequence) if sequence else None,
            samples=samples,
            seed=seed,
            tier=tier,
        )
        reports, summary = _run_jobs(entry.jobs(request), workers)
    except CliquePowersError as e:
        raise _fail(e) from e

    document = reports_document(reports, summary if metrics else None)
    validate_document("reports", document)
    if fmt == OutputFormat.JSON:
        typer.echo(dumps(document))
    elif fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["theorem", "parameters", "verdict"])
        for report in reports:
            writer.writerow([report.theorem, json.dumps(report.parameters, sort_keys=True), report.verdict])
        typer.echo(buffer.getvalue(), nl=False)
    else:
        _print_reports(reports)
    _save(save, reports, summary if metrics else None)
    raise typer.Exit(EXIT_CODES[overall_verdict(reports)])


def render_markdown_table(cells: list[TableCell]) -> str:
    """Rows C_n, columns r; cells are S^d, v^k S^d or *, with an agreement column."""
    rows: dict[int, dict[int, TableCell]] = {}
    for cell in cells:
        rows.setdefault(cell.n, {})[cell.r] = cell
    width = max((max(row) for row in rows.values()), default=0) + 1
    lines = [
        "| n | " + " | ".join(f"r={r}" for r in range(width)) + " | agrees |",
        "|---|" + "---|" * width + "---|",
    ]
    for n, row in sorted(rows.items()):
        entries = []
        for r in range(width):
            cell = row.get(r)
            if cell is None:
                entries.append("")
            elif cell.computed is None or cell.agrees:
                entries.append(cell.predicted if cell.computed is None else cell.computed)
            else:
                entries.append(f"{cell.computed} (expected {cell.predicted})")
        if all(c.computed is None and c.faces is None for c in row.values()):
            status = "-"
        elif any(c.agrees is None for c in row.values()):
            status = "resource"
        else:
            status = "yes" if all(c.agrees for c in row.values()) else "no"
        lines.append(f"| C_{n} | " + " | ".join(entries) + f" | {status} |")
    return "\n".join(lines) + "\n"


def render_csv_table(cells: list[TableCell]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "r", "predicted", "computed", "tier", "agrees", "faces"])
    for c in cells:
        writer.writerow([c.n, c.r, c.predicted, c.computed or "", c.tier, c.agrees, c.faces])
    return buffer.getvalue()


@app.command()
def table(
    n_max: int = typer.Argument(..., help="Largest cycle length"),
    n_min: int = typer.Option(3, "--n-min"),
    tier: HomologyTier = typer.Option(HomologyTier.AUTO, "--tier"),
    predicted_only: bool = typer.Option(False, "--predicted-only", help="Closed forms only, no homology"),
    workers: int | None = typer.Option(None, "--workers"),
    fmt: OutputFormat = typer.Option(OutputFormat.MARKDOWN, "--format"),
    metrics: bool = typer.Option(False, "--metrics"),
    save: str | None = typer.Option(None, "--save"),
) -> None:
    """The chart of cl(C_n^r) for n_min <= n <= n_max and 0 <= r <= n/2."""
    try:
        if predicted_only:
            cells = [
                TableCell(n=n, r=r, predicted=w.render())
                for n, row in prediction_table(n_max, n_min).items()
                for r, w in enumerate(row)
            ]
            reports: list[TheoremReport] = []
            summary: dict[str, Any] = {}
        else:
            prediction_table(n_max, n_min)
            request = CheckRequest(n=list(range(n_min, n_max + 1)), tier=tier)
            reports, summary = _run_jobs(REGISTRY["table"].jobs(request), workers)
            cells = [table_cell(report) for report in reports]
    except CliquePowersError as e:
        raise _fail(e) from e

    if fmt == OutputFormat.JSON:
        document: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "cells": [c.model_dump(mode="json") for c in cells]}
        validate_document("table", document)
        if metrics:
            document["metrics"] = summary
        typer.echo(dumps(document))
    elif fmt == OutputFormat.CSV:
        typer.echo(render_csv_table(cells), nl=False)
    elif fmt == OutputFormat.TEXT:
        view = Table(title="cl(C_n^r)")
        for column in ("n", "r", "predicted", "computed", "tier", "agrees"):
            view.add_column(column)
        for c in cells:
            view.add_row(str(c.n), str(c.r), c.predicted, c.computed or "-", str(c.tier), str(c.agrees))
        console.print(view)
    else:
        typer.echo(render_markdown_table(cells), nl=False)
    _save(save, reports, summary if metrics else None)
    raise typer.Exit(EXIT_CODES[overall_verdict(reports)] if reports else 0)


def main() -> None:
    app()
