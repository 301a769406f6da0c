"""
Graph and complex file formats, and async persistence of reports.

Edge lists start with an ``n m`` header followed by one ``u v`` line per edge. Facet lists
start with an ``n f`` header followed by one line of vertices per facet. In both formats
lines beginning with ``#`` carry ``key: value`` metadata and blank lines are ignored.
"""

import json
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

import aiofiles
from loguru import logger

from ..exceptions import InputError
from ..types import SCHEMA_VERSION, TheoremReport
from .complex import SimplicialComplex
from .graph import Graph


def _content_lines(text: str, source: str) -> tuple[list[list[int]], dict[str, str]]:
    metadata: dict[str, str] = {}
    rows: list[list[int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            if value:
                metadata[key.strip()] = value.strip()
            continue
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise InputError(f"{source}:{number}: expected integers, got '{line}'") from None
    return rows, metadata


def format_metadata(metadata: Mapping[str, Any] | None) -> list[str]:
    return [f"# {key}: {value}" for key, value in (metadata or {}).items()]


def format_edge_list(graph: Graph, metadata: Mapping[str, Any] | None = None) -> str:
    lines = format_metadata(metadata)
    lines.append(f"{graph.vertex_count} {graph.edge_count}")
    lines.extend(f"{u} {v}" for u, v in graph.edge_list())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, source: str = "<edge list>") -> Graph:
    rows, _ = _content_lines(text, source)
    if not rows or len(rows[0]) != 2:
        raise InputError(f"{source}: missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if any(len(row) != 2 for row in edges):
        raise InputError(f"{source}: every edge line needs exactly two vertices")
    if len(edges) != m:
        raise InputError(f"{source}: header announces {m} edges, found {len(edges)}")
    return Graph(n, ((u, v) for u, v in edges))


def format_facet_list(cx: SimplicialComplex, metadata: Mapping[str, Any] | None = None) -> str:
    lines = format_metadata(metadata)
    lines.append(f"{cx.vertex_count} {len(cx.facets)}")
    lines.extend(" ".join(map(str, facet)) for facet in cx.facets)
    return "\n".join(lines) + "\n"


def parse_facet_list(text: str, source: str = "<facet list>") -> SimplicialComplex:
    rows, _ = _content_lines(text, source)
    if not rows or len(rows[0]) != 2:
        raise InputError(f"{source}: missing 'n f' header")
    (n, f), facets = rows[0], rows[1:]
    if len(facets) != f:
        raise InputError(f"{source}: header announces {f} facets, found {len(facets)}")
    return SimplicialComplex.from_facets(n, facets)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def read_graph(path: Path) -> Graph:
    return parse_edge_list(_read(path), str(path))


def read_complex(path: Path) -> SimplicialComplex:
    return parse_facet_list(_read(path), str(path))


def reports_document(reports: Sequence[TheoremReport], metrics: Mapping[str, Any] | None = None) -> dict[str, Any]:
    """JSON document for a list of reports, with optional run metrics."""
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "reports": [report.model_dump(mode="json") for report in reports],
    }
    if metrics is not None:
        document["metrics"] = dict(metrics)
    return document


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False, sort_keys=False)


class AsyncFileManager:
    """Async writer for reports and generated artifacts under ``results_dir``."""

    def __init__(self, results_dir: Path = Path("results")):
        self.results_dir = results_dir

    async def ensure_directory(self, path: Path) -> None:
        try:
            path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            logger.error(f"Failed to create directory {path}: {e}")
            raise

    async def save_text(self, name: str, content: str) -> Path:
        await self.ensure_directory(self.results_dir)
        path = self.results_dir / name
        async with aiofiles.open(path, "w", encoding="utf-8") as f:
            await f.write(content)
        logger.info(f"Saved {path}")
        return path

    async def save_reports(
        self, name: str, reports: Sequence[TheoremReport], metrics: Mapping[str, Any] | None = None
    ) -> Path:
        """Save reports as a versioned JSON document."""
        return await self.save_text(name, dumps(reports_document(reports, metrics)) + "\n")

    async def load_reports(self, name: str) -> list[TheoremReport]:
        path = self.results_dir / name
        if not path.exists():
            logger.warning(f"Report file not found: {path}")
            return []
        async with aiofiles.open(path, encoding="utf-8") as f:
            data = json.loads(await f.read())
        return [TheoremReport.model_validate(item) for item in data.get("reports", [])]

