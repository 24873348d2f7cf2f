"""Plain-text graph format.

First non-comment line is ``n m``; then ``m`` lines ``u v`` (or ``u v w`` for
weighted graphs), 0-indexed and whitespace separated.  Lines starting with
``#`` are comments.
"""
from __future__ import annotations

from .errors import (
    DuplicateEdgeError,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
    WeightError,
)
from .graph import Graph, WeightedGraph, norm_edge


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _parse(text: str, weighted: bool):
    lines = list(_content_lines(text))
    if not lines:
        raise MalformedHeaderError("missing 'n m' header")
    lineno, header = lines[0]
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
        if n < 0 or m < 0:
            raise ValueError
    except ValueError:
        raise MalformedHeaderError(f"line {lineno}: bad header {' '.join(header)!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeaderError(f"header declares {m} edges, found {len(body)}")

    width = 3 if weighted else 2
    edges: dict = {}
    for lineno, parts in body:
        if len(parts) != width:
            raise MalformedEdgeError(f"line {lineno}: expected {width} fields, got {len(parts)}")
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise MalformedEdgeError(f"line {lineno}: non-integer field") from None
        u, v = nums[0], nums[1]
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"line {lineno}: vertex out of range [0, {n})")
        e = norm_edge(u, v)
        if e in edges:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {e}")
        if weighted and nums[2] < 1:
            raise WeightError(f"line {lineno}: weight {nums[2]} < 1")
        edges[e] = nums[2] if weighted else 1
    return n, edges


def read_graph(text: str) -> Graph:
    n, edges = _parse(text, weighted=False)
    return Graph(n, frozenset(edges))


def read_weighted(text: str) -> WeightedGraph:
    n, edges = _parse(text, weighted=True)
    return WeightedGraph(Graph(n, frozenset(edges)), edges)


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def write_weighted(wg: WeightedGraph) -> str:
    g = wg.graph
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {wg.weight[(u, v)]}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def load_weighted(path) -> WeightedGraph:
    with open(path, encoding="utf-8") as fh:
        return read_weighted(fh.read())
