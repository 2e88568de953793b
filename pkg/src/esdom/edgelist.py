"""Plain-text edge lists.

The first non-comment line is ``n m``; then come ``m`` lines ``u v`` with
0-based endpoints. Anything after ``#`` on a line is ignored, as are blank
lines.
"""

from __future__ import annotations

from .exceptions import InvalidGraphError
from .graph import Graph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise InvalidGraphError("edge list is empty (missing 'n m' header)")
    lineno, header = lines[0]
    if len(header) != 2:
        raise InvalidGraphError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InvalidGraphError(f"line {lineno}: non-integer header") from None
    body = lines[1:]
    if len(body) != m:
        raise InvalidGraphError(f"header announces {m} edges but {len(body)} follow")
    edges = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise InvalidGraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise InvalidGraphError(f"line {lineno}: non-integer endpoint") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"line {lineno}: loop at {u}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise InvalidGraphError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add(key)
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
