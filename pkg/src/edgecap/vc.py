"""Exact component-cap solver parameterized by vertex cover.

For a vertex cover ``S`` every set partition of ``S`` is tried as the trace
of the final components on ``S``.  Given a partition ``S_1..S_l``, vertices of
the independent set ``I = V \\ S`` are distributed, one twin class at a time,
among the blocks plus a "stay alone" slot.  A vertex joining block ``j`` loses
its edges to ``S \\ S_j``; a vertex staying alone loses all its edges; edges
of ``S`` between different blocks are always lost.  Block ``j`` can absorb at
most ``h - |S_j|`` independent vertices.  The resulting small integer program
is solved by branch and bound over the class count vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import GuardExceeded, InvalidCoverError
from .exact import Solution
from .graph import Graph, TwinClassification, is_vertex_cover, min_vertex_cover, norm_edge, twin_classes

PARTITION_GUARD = 12


@dataclass(frozen=True)
class CoverPartition:
    elements: tuple[int, ...]
    rgs: tuple[int, ...]

    @property
    def blocks(self) -> tuple[frozenset, ...]:
        count = max(self.rgs, default=-1) + 1
        blocks: list[set[int]] = [set() for _ in range(count)]
        for v, b in zip(self.elements, self.rgs):
            blocks[b].add(v)
        return tuple(frozenset(b) for b in blocks)

    @property
    def block_of(self) -> dict[int, int]:
        return dict(zip(self.elements, self.rgs))

    def rgs_string(self) -> str:
        return "".join(str(b) if b < 10 else chr(ord("a") + b - 10) for b in self.rgs)


def enumerate_partitions(cover: Iterable[int], guard: int = PARTITION_GUARD) -> Iterator[CoverPartition]:
    """All set partitions of ``cover`` as restricted-growth strings, in
    lexicographic order."""
    elements = tuple(sorted(set(cover)))
    size = len(elements)
    if size > guard:
        raise GuardExceeded(f"cover of size {size} exceeds partition guard {guard}")
    if size == 0:
        yield CoverPartition((), ())
        return
    rgs = [0] * size

    def rec(i: int, top: int):
        if i == size:
            yield CoverPartition(elements, tuple(rgs))
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    yield from rec(1, 0)


@dataclass(frozen=True)
class PartitionedCoverModel:
    partition: CoverPartition
    twins: TwinClassification
    cross_count: int
    # per class: (size, coefficient per slot); slot l is "stay alone"
    sizes: tuple[int, ...]
    coefficients: tuple[tuple[int, ...], ...]
    # independent vertices block j may still absorb, j < l
    capacities: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return len(self.capacities)


@dataclass(frozen=True)
class IpSolution:
    assignment: tuple[tuple[int, ...], ...]
    objective_value: int


def build_model(
    g: Graph,
    cover: Iterable[int],
    p: CoverPartition,
    h: int,
    twins: Optional[TwinClassification] = None,
) -> Optional[PartitionedCoverModel]:
    if h < 1:
        raise ValueError("h must be >= 1")
    cover = frozenset(cover)
    if twins is None:
        twins = twin_classes(g, cover)
    elif twins.cover != cover:
        raise InvalidCoverError("twin classification is for a different cover")
    if set(p.elements) != cover:
        raise InvalidCoverError("partition does not cover the vertex cover")
    blocks = p.blocks
    if any(len(b) > h for b in blocks):
        return None
    where = p.block_of
    cross = sum(
        1 for u, v in g.edges if u in where and v in where and where[u] != where[v]
    )
    sizes = []
    coefficients = []
    for signature, members in twins.classes:
        sizes.append(len(members))
        deg = len(signature)
        coefficients.append(
            tuple(deg - len(signature & b) for b in blocks) + (deg,)
        )
    return PartitionedCoverModel(
        partition=p,
        twins=twins,
        cross_count=cross,
        sizes=tuple(sizes),
        coefficients=tuple(coefficients),
        capacities=tuple(h - len(b) for b in blocks),
    )


def solve_model(model: PartitionedCoverModel) -> IpSolution:
    """Minimum of ``cross + sum c[i][j] * x[i][j]`` over integer ``x >= 0``
    with row sums equal to class sizes and block columns within capacity.

    Among optimal assignments the lexicographically smallest (row-major) is
    returned.  Routing every vertex to the "stay alone" slot is always
    feasible.
    """
    sizes = model.sizes
    coef = model.coefficients
    slots = model.block_count + 1
    classes = len(sizes)
    # cheapest possible completion ignoring capacities
    tail = [0] * (classes + 1)
    for i in range(classes - 1, -1, -1):
        tail[i] = tail[i + 1] + sizes[i] * min(coef[i])

    best_value = float("inf")
    best_rows: list = []
    caps = list(model.capacities)
    rows: list[tuple[int, ...]] = []

    def place(i: int, cost: int):
        nonlocal best_value, best_rows
        if cost + tail[i] >= best_value:
            return
        if i == classes:
            best_value, best_rows = cost, list(rows)
            return
        row = [0] * slots

        def fill(j: int, left: int, row_cost: int):
            if cost + row_cost + tail[i + 1] >= best_value:
                return
            if j == slots - 1:
                row[j] = left
                rows.append(tuple(row))
                place(i + 1, cost + row_cost + left * coef[i][j])
                rows.pop()
                return
            for x in range(min(left, caps[j]) + 1):
                row[j] = x
                caps[j] -= x
                fill(j + 1, left - x, row_cost + x * coef[i][j])
                caps[j] += x
            row[j] = 0

        fill(0, sizes[i], 0)

    place(0, model.cross_count)
    return IpSolution(tuple(best_rows), int(best_value))


def reconstruct(
    g: Graph,
    cover: Iterable[int],
    p: CoverPartition,
    twins: TwinClassification,
    sol: IpSolution,
) -> Solution:
    blocks = p.blocks
    where = p.block_of
    deleted = {
        e for e in g.edges if e[0] in where and e[1] in where and where[e[0]] != where[e[1]]
    }
    for (signature, members), row in zip(twins.classes, sol.assignment):
        members = sorted(members)
        pos = 0
        for j, count in enumerate(row):
            keep = blocks[j] if j < len(blocks) else frozenset()
            for v in members[pos:pos + count]:
                deleted.update(norm_edge(v, s) for s in signature - keep)
            pos += count
    return Solution(frozenset(deleted))


def solve_vc(
    g: Graph,
    h: int,
    cover: Optional[Iterable[int]] = None,
    stats: Optional[dict] = None,
    guard: int = PARTITION_GUARD,
) -> Solution:
    """Minimum edge deletion leaving components of at most ``h`` vertices."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if cover is None:
        cover = min_vertex_cover(g, g.n)
    cover = frozenset(cover)
    if not is_vertex_cover(g, cover):
        raise InvalidCoverError("not a vertex cover")
    if len(cover) > guard:
        raise GuardExceeded(f"vertex cover of size {len(cover)} exceeds guard {guard}")
    twins = twin_classes(g, cover)
    tried = 0
    best: Optional[tuple[IpSolution, CoverPartition]] = None
    for p in enumerate_partitions(cover, guard):
        tried += 1
        model = build_model(g, cover, p, h, twins)
        if model is None:
            continue
        if best is not None and model.cross_count >= best[0].objective_value:
            continue
        sol = solve_model(model)
        if best is None or sol.objective_value < best[0].objective_value:
            best = (sol, p)
    assert best is not None  # the all-singletons partition is always feasible
    sol, p = best
    if stats is not None:
        stats.update(
            partitions_tried=tried,
            best_partition=p.rgs_string(),
            objective=sol.objective_value,
            cover=sorted(cover),
        )
    return reconstruct(g, cover, p, twins, sol)
