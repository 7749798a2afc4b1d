"""Plain-text edge-list format.

Lines starting with ``#`` are comments. The first data line is ``n m``,
followed by ``m`` lines ``u v`` with 0-based vertices.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Union

from lexpacking.errors import GraphFormatError
from lexpacking.graphs.core import from_edge_list
from lexpacking.models.graph import Graph


def _data_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _ints(fields: list[str], line: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError as exc:
        raise GraphFormatError(f"line {line}: expected integers, got {fields}", line=line) from exc


def parse_edge_list(text: str) -> Graph:
    rows = list(_data_lines(text))
    if not rows:
        raise GraphFormatError("edge list is empty")
    header_line, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"line {header_line}: header must be 'n m'", line=header_line)
    n, m = _ints(header, header_line)
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}", line=header_line)

    edges: list[tuple[int, int]] = []
    for line, fields in body:
        if len(fields) != 2:
            raise GraphFormatError(f"line {line}: edge must be 'u v'", line=line)
        u, v = _ints(fields, line)
        edges.append((u, v))
    try:
        return from_edge_list(n, edges)
    except GraphFormatError as exc:
        if exc.edge is not None:
            exc.line = body[edges.index(exc.edge)][0]
        raise


def read_edge_list(path: Union[str, Path]) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file {path}: {exc}") from exc
    return parse_edge_list(text)


def format_edge_list(graph: Graph, header: Iterable[str] = ()) -> str:
    """Serialise with ``u < v`` edges in lexicographic order."""
    lines = [f"# {comment}" for comment in header]
    edges = graph.edges()
    lines.append(f"{graph.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, path: Union[str, Path], header: Iterable[str] = ()) -> None:
    Path(path).write_text(format_edge_list(graph, header), encoding="utf-8")
