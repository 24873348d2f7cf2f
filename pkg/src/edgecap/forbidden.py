"""Forbidden-subgraph families and containment checks.

Families are symbolic: a star ``K_{1,d}``, a cycle of exact length, "every tree
on t vertices", a flower of cycles sharing one centre, or an explicit pattern.
Each has a specialised decider; explicit patterns fall back to a generic
backtracking subgraph-isomorphism search, which also serves as the
cross-validation oracle for the specialised checks.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import FamilyError, GuardExceeded
from .graph import Edge, Graph, connected_components
from .io import read_graph, write_graph

PATTERN_VERTEX_LIMIT = 12


@dataclass(frozen=True)
class Star:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise FamilyError(f"star needs d >= 1, got {self.d!r}")


@dataclass(frozen=True)
class CycleExact:
    length: int

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 3:
            raise FamilyError(f"cycle needs length >= 3, got {self.length!r}")


@dataclass(frozen=True)
class AllTrees:
    t: int

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 2:
            raise FamilyError(f"tree family needs t >= 2, got {self.t!r}")


@dataclass(frozen=True)
class Flower:
    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(self.lengths)
        if not lengths:
            raise FamilyError("flower needs at least one petal")
        if len(set(lengths)) != len(lengths):
            raise FamilyError(f"flower petal lengths must be distinct: {lengths}")
        if any(not isinstance(L, int) or L < 3 for L in lengths):
            raise FamilyError(f"flower petal lengths must be >= 3: {lengths}")
        object.__setattr__(self, "lengths", tuple(sorted(lengths)))


@dataclass(frozen=True)
class Explicit:
    pattern: Graph


Descriptor = Union[Star, CycleExact, AllTrees, Flower, Explicit]


@dataclass(frozen=True)
class ForbiddenFamily:
    members: tuple = ()

    def __post_init__(self):
        members = tuple(self.members)
        for m in members:
            if not isinstance(m, (Star, CycleExact, AllTrees, Flower, Explicit)):
                raise FamilyError(f"unknown family member {m!r}")
        object.__setattr__(self, "members", members)

    def to_json(self) -> str:
        return json.dumps({"members": [_member_to_dict(m) for m in self.members]})

    @classmethod
    def from_json(cls, text: str) -> "ForbiddenFamily":
        try:
            data = json.loads(text)
            members = data["members"]
        except (ValueError, KeyError, TypeError) as exc:
            raise FamilyError(f"bad family JSON: {exc}") from None
        return cls(tuple(_member_from_dict(m) for m in members))


def cap_family(h: int) -> ForbiddenFamily:
    """Family whose absence means every component has at most ``h`` vertices."""
    return ForbiddenFamily((AllTrees(h + 1),))


def _member_to_dict(m: Descriptor) -> dict:
    if isinstance(m, Star):
        return {"kind": "star", "d": m.d}
    if isinstance(m, CycleExact):
        return {"kind": "cycle", "L": m.length}
    if isinstance(m, AllTrees):
        return {"kind": "all_trees", "t": m.t}
    if isinstance(m, Flower):
        return {"kind": "flower", "lengths": list(m.lengths)}
    return {"kind": "explicit", "graph": write_graph(m.pattern)}


def _member_from_dict(d) -> Descriptor:
    try:
        kind = d["kind"]
        if kind == "star":
            return Star(d["d"])
        if kind == "cycle":
            return CycleExact(d["L"])
        if kind == "all_trees":
            return AllTrees(d["t"])
        if kind == "flower":
            return Flower(tuple(d["lengths"]))
        if kind == "explicit":
            return Explicit(read_graph(d["graph"]))
    except (KeyError, TypeError) as exc:
        raise FamilyError(f"bad family member {d!r}: {exc}") from None
    raise FamilyError(f"unknown family kind {d.get('kind')!r}")


@dataclass(frozen=True)
class FlowerHost(Graph):
    """A graph produced by the hitting-set generator, possibly with edges removed.

    ``petals`` maps each petal to its cycle length and full edge list in the
    original (undeleted) host.  Deleting edges keeps the tag.
    """

    center: int = 0
    petals: tuple[tuple[int, tuple[Edge, ...]], ...] = ()


# --- specialised deciders -------------------------------------------------


def contains_star(g: Graph, d: int) -> bool:
    if d < 1:
        raise FamilyError("star degree must be >= 1")
    return g.max_degree() >= d


def contains_tree_family(g: Graph, t: int) -> bool:
    """True iff some tree on ``t`` vertices is a subgraph, i.e. some component
    has at least ``t`` vertices."""
    if t < 1:
        raise FamilyError("tree size must be >= 1")
    return any(len(c) >= t for c in connected_components(g))


def contains_flower(g: Graph, lengths: Iterable[int]) -> bool:
    # Every cycle of a flower host is one petal, so the flower is present
    # exactly when each requested petal still has all of its edges.
    if not isinstance(g, FlowerHost):
        raise FamilyError("flower containment is only defined on flower hosts")
    lengths = set(lengths)
    if not lengths:
        raise FamilyError("flower needs at least one petal length")
    by_length = dict(g.petals)
    for L in lengths:
        petal = by_length.get(L)
        if petal is None or not g.edges.issuperset(petal):
            return False
    return True


def _bfs_dist(adj: list[set[int]], source: int, limit: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du == limit:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _cycle_through(adj: list[set[int]], anchor: int, length: int) -> bool:
    dist = _bfs_dist(adj, anchor, length // 2)
    for first in sorted(adj[anchor]):
        # each cycle is found once: closing neighbour is larger than the first
        targets = {x for x in adj[anchor] if x > first}
        if not targets:
            continue
        on_path = {anchor, first}
        stack = [(first, iter(sorted(adj[first])))]
        while stack:
            v, it = stack[-1]
            used = len(stack)
            if used == length - 1:
                if v in targets:
                    return True
                on_path.discard(v)
                stack.pop()
                continue
            remaining = length - used - 1
            for w in it:
                if w in on_path or dist.get(w, length) > remaining:
                    continue
                on_path.add(w)
                stack.append((w, iter(sorted(adj[w]))))
                break
            else:
                on_path.discard(v)
                stack.pop()
    return False


def contains_cycle_exact(g: Graph, length: int) -> bool:
    """True iff ``g`` has a simple cycle with exactly ``length`` vertices.

    Anchors are taken in ascending degree order; after an anchor is exhausted
    it is removed, and the graph is kept peeled to its 2-core.
    """
    if length < 3:
        raise FamilyError("cycle length must be >= 3")
    if g.n < length or g.m < length:
        return False
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))

    def drop(v):
        alive.discard(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                adj[w].discard(x)
                if w in alive and len(adj[w]) < 2:
                    alive.discard(w)
                    stack.append(w)
            adj[x].clear()

    for v in range(g.n):
        if v in alive and len(adj[v]) < 2:
            drop(v)
    while len(alive) >= length:
        anchor = min(alive, key=lambda v: (len(adj[v]), v))
        if _cycle_through(adj, anchor, length):
            return True
        drop(anchor)
    return False


# --- generic oracle --------------------------------------------------------


def subgraph_isomorphic(pattern: Graph, host: Graph, limit: int = PATTERN_VERTEX_LIMIT) -> bool:
    """Is there an injective map carrying every pattern edge onto a host edge?"""
    if pattern.n > limit:
        raise GuardExceeded(f"pattern has {pattern.n} vertices (limit {limit})")
    if pattern.n > host.n or pattern.m > host.m:
        return False
    pdeg = sorted((pattern.degree(v) for v in range(pattern.n)), reverse=True)
    hdeg = sorted((host.degree(v) for v in range(host.n)), reverse=True)
    if any(p > h for p, h in zip(pdeg, hdeg)):
        return False

    # connectivity-first order: each vertex after the first in its component
    # has an already-placed neighbour
    order: list[int] = []
    placed = set()
    for root in sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v)):
        if root in placed:
            continue
        placed.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(pattern.adj[u], key=lambda x: (-pattern.degree(x), x)):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    anchors = []
    seen = set()
    for u in order:
        anchors.append([w for w in pattern.adj[u] if w in seen])
        seen.add(u)

    image = [-1] * pattern.n
    used = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        u = order[pos]
        prior = anchors[pos]
        if prior:
            candidates = host.adj[image[prior[0]]]
        else:
            candidates = range(host.n)
        need = pattern.degree(u)
        for x in candidates:
            if x in used or host.degree(x) < need:
                continue
            if any(image[p] not in host.adj[x] for p in prior):
                continue
            image[u] = x
            used.add(x)
            if extend(pos + 1):
                return True
            used.discard(x)
        image[u] = -1
        return False

    return extend(0)


def family_free(g: Graph, fam: ForbiddenFamily) -> bool:
    for m in fam.members:
        if isinstance(m, Star):
            hit = contains_star(g, m.d)
        elif isinstance(m, CycleExact):
            hit = contains_cycle_exact(g, m.length)
        elif isinstance(m, AllTrees):
            hit = contains_tree_family(g, m.t)
        elif isinstance(m, Flower):
            hit = contains_flower(g, m.lengths)
        else:
            hit = subgraph_isomorphic(m.pattern, g)
        if hit:
            return False
    return True


# --- small pattern builders used by tests and generators -------------------


def star_graph(d: int) -> Graph:
    return Graph(d + 1, frozenset((0, i) for i in range(1, d + 1)))


def cycle_graph(length: int) -> Graph:
    return Graph(length, frozenset((i, (i + 1) % length) for i in range(length)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def flower_graph(lengths: Iterable[int]) -> Graph:
    """Cycles of the given lengths sharing vertex 0 and nothing else."""
    edges = []
    nxt = 1
    for L in sorted(lengths):
        ring = [0] + list(range(nxt, nxt + L - 1))
        nxt += L - 1
        edges += [(ring[i], ring[(i + 1) % L]) for i in range(L)]
    return Graph(nxt, frozenset(edges))
