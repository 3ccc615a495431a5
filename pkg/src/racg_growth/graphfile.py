"""Plain-text graph files.

::

    # comments run to end of line
    3          <- vertex count
    0 1        <- one edge per line, 0-based
    1 2
"""
from __future__ import annotations

from pathlib import Path

from .graph import SimplicialGraph


class GraphFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"{message} at line {line}" if line is not None else message)


def parse_graph_file(text: str) -> SimplicialGraph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            bad = next(t for t in tokens if not _is_int(t))
            raise GraphFileError(f"malformed token {bad!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise GraphFileError("expected a single vertex count", lineno)
            n = values[0]
            if n < 0:
                raise GraphFileError("negative vertex count", lineno)
            continue
        if len(values) != 2:
            raise GraphFileError(f"expected two vertex indices, got {len(values)} tokens", lineno)
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFileError("loop", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFileError(f"duplicate edge {key} (first at line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if n is None:
        raise GraphFileError("missing vertex count")
    return SimplicialGraph.from_edges(n, edges)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def write_graph_file(graph: SimplicialGraph) -> str:
    lines = [str(graph.vertex_count)]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> SimplicialGraph:
    return parse_graph_file(Path(path).read_text())
