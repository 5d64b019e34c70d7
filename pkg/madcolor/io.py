"""
Text formats.

GraphFile:    "n m", then m lines "u v" (0-based vertex ids)
ColoringFile: "m D", then m lines "edge_id u v color"

Lines starting with '#' and blank lines are ignored; fields are whitespace
separated. Writers emit edges in id order, so parse(format(g)) == g.
"""

import json
import typing as ty
from dataclasses import dataclass
from pathlib import Path

from madcolor._types import Color
from madcolor.colorer import ColoringReport, EdgeColoring
from madcolor.errors import GraphError, GraphFileError
from madcolor.graph import Graph, build_graph


@dataclass(frozen=True)
class ColoringFile:
    palette_size: int
    colors: tuple[Color, ...]


def _records(text: str) -> ty.Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], count: int, lineno: int, what: str) -> list[int]:
    if len(fields) != count:
        raise GraphFileError(f"{what} needs {count} fields, got {len(fields)}", line=lineno)
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise GraphFileError(f"{what} has a non-integer field: {' '.join(fields)}", line=lineno) from exc


def _header(records: ty.Iterator[tuple[int, list[str]]], what: str) -> tuple[int, int, int]:
    try:
        lineno, fields = next(records)
    except StopIteration:
        raise GraphFileError(f"missing {what} header") from None
    a, b = _ints(fields, 2, lineno, f"{what} header")
    if a < 0 or b < 0:
        raise GraphFileError(f"{what} header values must be non-negative", line=lineno)
    return lineno, a, b


def parse_graph(text: str) -> Graph:
    records = _records(text)
    lineno, n, m = _header(records, "graph")
    pairs: list[tuple[int, int]] = []
    for lineno, fields in records:
        if len(pairs) == m:
            raise GraphFileError(f"more than the declared {m} edge lines", line=lineno)
        u, v = _ints(fields, 2, lineno, "edge line")
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphFileError(f"declared {m} edges, found {len(pairs)}", line=lineno)
    try:
        return build_graph(n, pairs)
    except GraphError as exc:
        raise GraphFileError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for _, u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))


def parse_coloring(text: str, g: Graph) -> ColoringFile:
    """
    Structure only: every edge id once, endpoints as in `g`. Whether the
    colors form a proper coloring is the validator's call.
    """
    records = _records(text)
    lineno, m, palette = _header(records, "coloring")
    if m != g.edge_count:
        raise GraphFileError(f"coloring covers {m} edges, graph has {g.edge_count}", line=lineno)
    colors: list[Color | None] = [None] * m
    seen = 0
    for lineno, fields in records:
        e, u, v, c = _ints(fields, 4, lineno, "coloring line")
        if not 0 <= e < m:
            raise GraphFileError(f"unknown edge id {e}", line=lineno)
        if colors[e] is not None:
            raise GraphFileError(f"edge {e} listed twice", line=lineno)
        if {u, v} != set(g.edge(e)):
            raise GraphFileError(f"edge {e} is {g.edge(e)} in the graph, not ({u}, {v})", line=lineno)
        colors[e] = c
        seen += 1
    if seen != m:
        raise GraphFileError(f"declared {m} coloring lines, found {seen}")
    return ColoringFile(palette, tuple(c for c in colors if c is not None))


def format_coloring(g: Graph, colors: ty.Sequence[Color], palette_size: int) -> str:
    lines = [f"{g.edge_count} {palette_size}"]
    lines.extend(f"{e} {u} {v} {colors[e]}" for e, u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_coloring(path: str | Path, g: Graph) -> ColoringFile:
    return parse_coloring(Path(path).read_text(), g)


def write_coloring(coloring: EdgeColoring, path: str | Path) -> None:
    Path(path).write_text(format_coloring(coloring.graph, coloring.colors, coloring.palette_size))


def dump_stats(report: ColoringReport) -> str:
    return json.dumps(report.to_stats(), indent=2)


def write_stats(report: ColoringReport, path: str | Path) -> None:
    Path(path).write_text(dump_stats(report) + "\n")
