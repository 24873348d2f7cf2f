"""Exact solvers: an exhaustive edge-subset oracle and a bounded search tree
for the component-cap problem."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional

import numpy as np

from .errors import EdgeNotInGraph, GuardExceeded
from .forbidden import AllTrees, ForbiddenFamily, family_free
from .graph import Edge, Graph, connected_components, norm_edge

ENUMERATION_GUARD = 10**8
# above this edge count the vectorised subset table is not attempted
_TABLE_MAX_EDGES = 26
_CHUNK_BITS = 18


@dataclass(frozen=True)
class Solution:
    deleted_edges: frozenset

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Solution":
        return cls(frozenset(norm_edge(*e) for e in edges))

    @property
    def size(self) -> int:
        return len(self.deleted_edges)

    @property
    def edge_list(self) -> list[Edge]:
        return sorted(self.deleted_edges)


def verify(g: Graph, sol: Solution, fam: ForbiddenFamily) -> bool:
    missing = sol.deleted_edges - g.edges
    if missing:
        raise EdgeNotInGraph(f"deleted edges not in graph: {sorted(missing)}")
    return family_free(g.without_edges(sol.deleted_edges), fam)


def candidate_count(m: int, k_max: int) -> int:
    return sum(comb(m, j) for j in range(min(k_max, m) + 1))


def brute_force_min(
    g: Graph, fam: ForbiddenFamily, k_max: int, guard: int = ENUMERATION_GUARD
) -> Optional[Solution]:
    """First family-free deletion set in (size, lexicographic) order.

    Edge subsets of ``g.edge_list`` are tried by increasing size ``0..k_max``
    in ``itertools.combinations`` order, so the result is a minimum witness.
    """
    if k_max < 0:
        return None
    total = candidate_count(g.m, k_max)
    if total > guard:
        raise GuardExceeded(f"{total} candidate edge sets exceed guard {guard}")
    members = fam.members
    if len(members) == 1 and isinstance(members[0], AllTrees) and g.m <= _TABLE_MAX_EDGES:
        size, deleted = cap_profile(g).get(members[0].t - 1, (0, ()))
        if size > k_max:
            return None
        return Solution(frozenset(deleted))

    edges = g.edge_list
    for size in range(min(k_max, g.m) + 1):
        for combo in combinations(edges, size):
            if family_free(g.without_edges(combo), fam):
                return Solution(frozenset(combo))
    return None


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


@lru_cache(maxsize=512)
def cap_profile(g: Graph) -> dict[int, tuple[int, tuple[Edge, ...]]]:
    """For every cap ``h`` in ``1..n-1``: the minimum number of deletions and
    the lexicographically first minimum deletion set, by exhaustively
    evaluating every subset of kept edges.

    Caps ``h >= n`` need no deletions and are omitted.
    """
    n, m = g.n, g.m
    if m > _TABLE_MAX_EDGES:
        raise GuardExceeded(f"subset table needs 2^{m} rows")
    if n <= 8:
        dtype = np.uint8
    elif n <= 16:
        dtype = np.uint16
    elif n <= 32:
        dtype = np.uint32
    elif n <= 64:
        dtype = np.uint64
    else:
        raise GuardExceeded("subset table supports at most 64 vertices")
    edges = g.edge_list
    full = (1 << m) - 1
    # best[h] = (size, -reversed deletion mask); a larger bit-reversed mask is
    # the lexicographically smaller index tuple among sets of equal size
    best: dict[int, tuple[int, int]] = {}
    chunk = 1 << min(m, _CHUNK_BITS)
    for start in range(0, 1 << m, chunk):
        kept = np.arange(start, start + chunk, dtype=np.int64)
        reach = [np.full(chunk, 1 << v, dtype=dtype) for v in range(n)]
        ones = np.array(-1).astype(dtype)
        masks = [((kept >> i) & 1).astype(dtype) * ones for i in range(m)]
        while True:
            before = [r.copy() for r in reach]
            for i, (a, b) in enumerate(edges):
                reach[a] |= reach[b] & masks[i]
                reach[b] |= reach[a] & masks[i]
            if all(np.array_equal(x, y) for x, y in zip(before, reach)):
                break
        largest = np.zeros(chunk, dtype=np.int64)
        for v in range(n):
            np.maximum(largest, _popcount(reach[v]), out=largest)
        deleted = full ^ kept
        sizes = m - _popcount(kept)
        rev = np.zeros(chunk, dtype=np.int64)
        for i in range(m):
            rev |= ((deleted >> i) & 1) << (m - 1 - i)
        for h in range(1, n):
            ok = largest <= h
            if not ok.any():
                continue
            smin = int(sizes[ok].min())
            pick = ok & (sizes == smin)
            key = (smin, -int(rev[pick].max()))
            if h not in best or key < best[h]:
                best[h] = key
    profile = {}
    for h, (size, neg_rev) in best.items():
        rev = -neg_rev
        chosen = tuple(edges[i] for i in range(m) if (rev >> (m - 1 - i)) & 1)
        profile[h] = (size, chosen)
    return profile


# --- bounded search tree ---------------------------------------------------


def _max_kept(s: int, h: int) -> int:
    q, r = divmod(s, h)
    return q * comb(h, 2) + comb(r, 2)


def _components(n: int, adj: list[set[int]]) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        for u in comp:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
        comps.append(comp)
    return comps


def _lower_bound(comps, adj, h: int) -> int:
    total = 0
    for comp in comps:
        s = len(comp)
        if s <= h:
            continue
        e = sum(len(adj[v]) for v in comp) // 2
        total += max(-(-s // h) - 1, e - _max_kept(s, h))
    return total


def _bfs_tree(adj: list[set[int]], root: int, size: int) -> list[Edge]:
    placed = {root}
    order = [root]
    tree = []
    for u in order:
        for w in sorted(adj[u]):
            if w not in placed:
                placed.add(w)
                order.append(w)
                tree.append(norm_edge(u, w))
                if len(order) == size:
                    return tree
    return tree


def branch_cap(g: Graph, h: int, k: int, stats: Optional[dict] = None) -> Optional[Solution]:
    """Delete at most ``k`` edges so every component has at most ``h`` vertices.

    While some component is too large, a BFS tree on ``h + 1`` of its vertices
    is grown from its smallest vertex and the search branches on deleting each
    of the tree's ``h`` edges.  Budgets are tried in increasing order, so the
    returned solution has minimum size.
    """
    if h < 1 or k < 0:
        raise ValueError("need h >= 1 and k >= 0")
    n = g.n
    nodes = 0
    failed: dict[frozenset, int] = {}

    def search(edges: frozenset, budget: int) -> Optional[list[Edge]]:
        nonlocal nodes
        nodes += 1
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        comps = _components(n, adj)
        big = next((c for c in comps if len(c) > h), None)
        if big is None:
            return []
        if budget == 0 or _lower_bound(comps, adj, h) > budget:
            return None
        if failed.get(edges, -1) >= budget:
            return None
        for e in _bfs_tree(adj, min(big), h + 1):
            rest = search(edges - {e}, budget - 1)
            if rest is not None:
                return [e] + rest
        failed[edges] = budget
        return None

    try:
        for budget in range(k + 1):
            found = search(g.edges, budget)
            if found is not None:
                return Solution(frozenset(found))
        return None
    finally:
        if stats is not None:
            stats["nodes_expanded"] = stats.get("nodes_expanded", 0) + nodes


def min_cap_deletions(g: Graph, h: int) -> Solution:
    """Minimum solution from :func:`branch_cap` with an unrestricted budget."""
    sol = branch_cap(g, h, g.m)
    assert sol is not None  # deleting every edge always works
    return sol

