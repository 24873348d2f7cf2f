"""Core graph types: simple graphs, weighted graphs, orientations, twin classes.

Vertices are the integers ``0 .. vertex_count - 1``.  Edges are stored as
sorted pairs ``(u, v)`` with ``u < v`` and are iterated in sorted order, so
every algorithm built on top of these types is deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import GraphError, InvalidCoverError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"negative vertex count {self.vertex_count}")
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {e} out of range for n={self.vertex_count}")
            edges.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        edges = list(edges)
        normed = {norm_edge(*e) for e in edges}
        if len(normed) != len(edges):
            raise GraphError("duplicate edge")
        return cls(n, frozenset(normed))

    def _derive(self, edges: frozenset) -> "Graph":
        # Skips validation: callers only pass subsets of self.edges.
        g = object.__new__(type(self))
        for name, value in self.__dict__.items():
            if name in self.__dataclass_fields__:
                object.__setattr__(g, name, value)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        """Return the graph with ``removed`` deleted; every edge must exist."""
        removed = {norm_edge(*e) for e in removed}
        missing = removed - self.edges
        if missing:
            raise GraphError(f"edges not in graph: {sorted(missing)}")
        return self._derive(self.edges - removed)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1``; also returns new->old labels."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(labels), edges), labels


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    graph: Graph
    weight: Mapping[Edge, int]

    def __post_init__(self):
        weights = {norm_edge(*e): w for e, w in self.weight.items()}
        if set(weights) != set(self.graph.edges):
            raise GraphError("weights must be given for exactly the graph's edges")
        for e, w in weights.items():
            if not isinstance(w, int) or w < 1:
                raise GraphError(f"edge {e} has weight {w!r}; weights are integers >= 1")
        object.__setattr__(self, "weight", weights)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.graph == other.graph and self.weight == other.weight

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total_weight(self) -> int:
        return sum(self.weight.values())

    def weighted_degree(self, u: int) -> int:
        return sum(self.weight[norm_edge(u, v)] for v in self.graph.adj[u])

    def max_weighted_degree(self) -> int:
        return max((self.weighted_degree(u) for u in range(self.n)), default=0)


@dataclass(frozen=True, eq=False)
class Orientation:
    """Direction for every edge: ``direction[(u, v)] = (tail, head)``."""

    direction: Mapping[Edge, Edge]

    def __post_init__(self):
        for e, (tail, head) in self.direction.items():
            if norm_edge(tail, head) != e:
                raise GraphError(f"direction {tail}->{head} does not match edge {e}")

    def out_weight(self, wg: WeightedGraph, u: int) -> int:
        return sum(
            wg.weight[e] for e, (tail, _) in self.direction.items() if tail == u
        )

    def in_weight(self, wg: WeightedGraph, u: int) -> int:
        return sum(
            wg.weight[e] for e, (_, head) in self.direction.items() if head == u
        )

    def max_out_weight(self, wg: WeightedGraph) -> int:
        return max((self.out_weight(wg, u) for u in range(wg.n)), default=0)


@dataclass(frozen=True)
class TwinClassification:
    """Twin classes of the independent set ``V \\ cover``.

    ``classes`` holds ``(signature, members)`` pairs, where ``signature`` is the
    common neighbourhood (a subset of the cover), ordered by sorted signature.
    """

    cover: frozenset
    classes: tuple[tuple[frozenset, tuple[int, ...]], ...] = field(default=())

    @property
    def independent(self) -> frozenset:
        return frozenset(v for _, members in self.classes for v in members)


def connected_components(g: Graph) -> list[set[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges)


def twin_classes(g: Graph, cover: Iterable[int]) -> TwinClassification:
    cover = frozenset(cover)
    if any(not 0 <= v < g.n for v in cover):
        raise InvalidCoverError("cover contains vertices outside the graph")
    if not is_vertex_cover(g, cover):
        raise InvalidCoverError("not a vertex cover")
    groups: dict[frozenset, list[int]] = {}
    for v in range(g.n):
        if v not in cover:
            groups.setdefault(g.adj[v], []).append(v)
    ordered = sorted(groups.items(), key=lambda kv: tuple(sorted(kv[0])))
    return TwinClassification(
        cover, tuple((sig, tuple(members)) for sig, members in ordered)
    )


def _cover_fits(
    edges: list[Edge], budget: int, forced_in: frozenset, forced_out: frozenset
) -> bool:
    """Is there a vertex cover with at most ``budget`` vertices beyond
    ``forced_in`` that avoids ``forced_out``?"""
    chosen = set(forced_in)
    for u, v in edges:
        if u in forced_out and v in forced_out:
            return False
        if u in forced_out:
            chosen.add(v)
        elif v in forced_out:
            chosen.add(u)
    extra = len(chosen) - len(forced_in)
    rest = [e for e in edges if e[0] not in chosen and e[1] not in chosen]
    return _branch_cover(rest, budget - extra)


def _branch_cover(edges: list[Edge], budget: int) -> bool:
    if budget < 0:
        return False
    if not edges:
        return True
    if budget == 0:
        return False
    u, v = edges[0]
    for pick in (u, v):
        rest = [e for e in edges if pick not in e]
        if _branch_cover(rest, budget - 1):
            return True
    return False


def min_vertex_cover(g: Graph, bound: int) -> Optional[frozenset]:
    """Lexicographically smallest minimum vertex cover, or None if every
    vertex cover has more than ``bound`` vertices."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    edges = list(g.edge_list)
    size = next((s for s in range(bound + 1) if _branch_cover(edges, s)), None)
    if size is None:
        return None
    chosen: set[int] = set()
    excluded: set[int] = set()
    for v in range(g.n):
        if len(chosen) == size:
            break
        trial = frozenset(chosen | {v})
        if _cover_fits(edges, size - len(trial), trial, frozenset(excluded)):
            chosen.add(v)
        else:
            excluded.add(v)
    return frozenset(chosen)
