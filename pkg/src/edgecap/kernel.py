"""Kernelization for the component-cap problem.

The single reduction rule deletes every connected component with at most
``h`` vertices; such a component never needs an edge deleted.  Once the rule
is exhausted, a yes-instance has at most ``2kh`` vertices and ``2kh^2 + k``
edges, so exceeding either bound proves a no-instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, connected_components


class Verdict(str, Enum):
    OPEN = "open"
    NO_BY_BOUNDS = "no_by_bounds"


@dataclass(frozen=True)
class KernelResult:
    reduced: Graph
    # labels[i] is the input vertex that became vertex i of ``reduced``
    labels: tuple[int, ...]
    removed_components: tuple[frozenset, ...]
    k: int
    h: int
    verdict: Verdict

    def lift_edge(self, e):
        return tuple(sorted((self.labels[e[0]], self.labels[e[1]])))


def vertex_bound(k: int, h: int) -> int:
    return 2 * k * h


def edge_bound(k: int, h: int) -> int:
    return 2 * k * h * h + k


def kernelize(g: Graph, k: int, h: int, check_bounds: bool = True) -> KernelResult:
    if k < 0 or h < 1:
        raise ValueError("need k >= 0 and h >= 1")
    removed = []
    kept = []
    # components are unaffected by deleting other components, so one pass
    # applies the rule exhaustively
    for comp in connected_components(g):
        if len(comp) <= h:
            removed.append(frozenset(comp))
        else:
            kept.extend(comp)
    reduced, labels = g.induced(kept)
    verdict = Verdict.OPEN
    if check_bounds and (
        reduced.n > vertex_bound(k, h) or reduced.m > edge_bound(k, h)
    ):
        verdict = Verdict.NO_BY_BOUNDS
    return KernelResult(reduced, tuple(labels), tuple(removed), k, h, verdict)
