"""Instance generators for two hardness constructions, with source-problem
brute-force solvers and forward-witness builders.

* Minimum maximum outdegree -> {star, long cycle}-free edge deletion.  Every
  weighted edge ``uv`` becomes four pendant-like vertex sets joined by long
  red and blue paths; deleting the ``w(uv)`` edges at the head of an oriented
  edge kills every cycle of the forbidden length.
* Hitting set -> flower-free edge deletion.  Element ``i`` becomes a petal
  cycle of length ``2i + 2`` through a shared centre, and each set becomes a
  flower made of its petals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional

from .errors import GuardExceeded
from .exact import Solution
from .forbidden import CycleExact, Flower, FlowerHost, ForbiddenFamily, Star
from .graph import Edge, Graph, Orientation, WeightedGraph, norm_edge

MMO_EDGE_GUARD = 20
HS_GUARD = 12


# --- minimum maximum outdegree ---------------------------------------------


@dataclass(frozen=True, eq=False)
class MmoInstance:
    wg: WeightedGraph
    r: int

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"the construction needs r >= 3, got {self.r}")


@dataclass(frozen=True)
class Path:
    ends: tuple[int, int]
    internal: tuple[int, ...]

    def vertices(self) -> tuple[int, ...]:
        return (self.ends[0],) + self.internal + (self.ends[1],)

    def edges(self) -> list[Edge]:
        vs = self.vertices()
        return [norm_edge(a, b) for a, b in zip(vs, vs[1:])]


@dataclass(frozen=True)
class EdgeGadget:
    u: int
    v: int
    weight: int
    near_u: tuple[int, ...]  # V_uv, joined to u and to the red paths
    near_u_blue: tuple[int, ...]  # V'_uv, joined to u and to the blue paths
    near_v: tuple[int, ...]  # V_vu
    near_v_blue: tuple[int, ...]  # V'_vu
    red: tuple[Path, ...] = ()
    blue: tuple[Path, ...] = ()

    def head_side(self, head: int) -> tuple[int, ...]:
        if head == self.u:
            return self.near_u
        if head == self.v:
            return self.near_v
        raise ValueError(f"{head} is not an endpoint of ({self.u}, {self.v})")


@dataclass(frozen=True, eq=False)
class GadgetLayout:
    n: int
    omega: int
    big_n: int
    max_wdeg: int
    r: int
    pendants: tuple[tuple[int, ...], ...]
    gadgets: dict = field(default_factory=dict)  # input edge -> EdgeGadget

    @property
    def star_d(self) -> int:
        return self.max_wdeg + self.r + 1

    @property
    def cycle_length(self) -> int:
        return 5 * self.big_n + 2

    @property
    def k(self) -> int:
        return self.omega

    def expected_vertex_count(self) -> int:
        return self.n + self.n * self.max_wdeg + 10 * self.omega * self.big_n - 6 * self.omega

    def expected_edge_count(self) -> int:
        return self.n * self.max_wdeg - 2 * self.omega + 10 * self.omega * self.big_n

    def to_dict(self) -> dict:
        def rng(vs):
            return [vs[0], vs[-1] + 1] if vs else []

        return {
            "n": self.n,
            "omega": self.omega,
            "N": self.big_n,
            "max_weighted_degree": self.max_wdeg,
            "r": self.r,
            "k": self.k,
            "star_d": self.star_d,
            "cycle_length": self.cycle_length,
            "originals": [0, self.n],
            "pendants": {str(u): rng(p) for u, p in enumerate(self.pendants)},
            "edges": [
                {
                    "u": g.u,
                    "v": g.v,
                    "w": g.weight,
                    "V_uv": rng(g.near_u),
                    "V_uv_blue": rng(g.near_u_blue),
                    "V_vu": rng(g.near_v),
                    "V_vu_blue": rng(g.near_v_blue),
                    "red_paths": [
                        {"ends": list(p.ends), "internal": rng(p.internal)} for p in g.red
                    ],
                    "blue_paths": [
                        {"ends": list(p.ends), "internal": rng(p.internal)} for p in g.blue
                    ],
                }
                for _, g in sorted(self.gadgets.items())
            ],
        }


def _pairs(a: tuple[int, ...], b: tuple[int, ...]) -> list[tuple[int, int]]:
    """The 2w endpoint pairs: (a_i, b_i) and (a_i, b_{i+1}) cyclically.

    For w = 1 the same pair appears twice and becomes two parallel paths.
    """
    w = len(a)
    return [(a[i], b[i]) for i in range(w)] + [(a[i], b[(i + 1) % w]) for i in range(w)]


def gen_mmo(inst: MmoInstance) -> tuple[Graph, GadgetLayout, ForbiddenFamily, int]:
    wg, r = inst.wg, inst.r
    if r < 3:
        raise ValueError("r must be >= 3")
    n = wg.n
    omega = wg.total_weight
    big_n = n + 3 * omega + 1
    max_wdeg = wg.max_weighted_degree()
    edges: list[Edge] = []
    counter = n

    def take(count: int) -> tuple[int, ...]:
        nonlocal counter
        block = tuple(range(counter, counter + count))
        counter += count
        return block

    pendants = []
    for u in range(n):
        block = take(max_wdeg - wg.weighted_degree(u))
        pendants.append(block)
        edges += [(u, x) for x in block]

    sides = {}
    for e in wg.graph.edge_list:
        u, v = e
        w = wg.weight[e]
        sets = (take(w), take(w), take(w), take(w))
        sides[e] = sets
        near_u, near_u_blue, near_v, near_v_blue = sets
        edges += [(u, x) for x in near_u + near_u_blue]
        edges += [(v, x) for x in near_v + near_v_blue]

    red: dict[Edge, list[Path]] = {}
    for e in wg.graph.edge_list:
        near_u, _, near_v, _ = sides[e]
        red[e] = [Path(pair, take(big_n - 1)) for pair in _pairs(near_u, near_v)]
    blue: dict[Edge, list[Path]] = {}
    for e in wg.graph.edge_list:
        _, near_u_blue, _, near_v_blue = sides[e]
        blue[e] = [
            Path(pair, take(4 * big_n - 3)) for pair in _pairs(near_u_blue, near_v_blue)
        ]

    gadgets = {}
    for e in wg.graph.edge_list:
        for p in red[e] + blue[e]:
            edges += p.edges()
        gadgets[e] = EdgeGadget(
            e[0], e[1], wg.weight[e], *sides[e], red=tuple(red[e]), blue=tuple(blue[e])
        )

    g = Graph.from_edges(counter, edges)
    layout = GadgetLayout(n, omega, big_n, max_wdeg, r, tuple(pendants), gadgets)
    family = ForbiddenFamily((Star(layout.star_d), CycleExact(layout.cycle_length)))
    return g, layout, family, layout.k


def mmo_brute_force(inst: MmoInstance) -> Optional[Orientation]:
    """First orientation (edges in sorted order, ``u -> v`` before ``v -> u``
    for ``u < v``) whose weighted outdegrees are all at most ``r``."""
    wg = inst.wg
    edges = wg.graph.edge_list
    if len(edges) > MMO_EDGE_GUARD:
        raise GuardExceeded(f"{len(edges)} edges exceed orientation guard {MMO_EDGE_GUARD}")
    for flips in product((False, True), repeat=len(edges)):
        out = [0] * wg.n
        for (u, v), flip in zip(edges, flips):
            out[v if flip else u] += wg.weight[(u, v)]
        if max(out, default=0) <= inst.r:
            return Orientation(
                {(u, v): ((v, u) if flip else (u, v)) for (u, v), flip in zip(edges, flips)}
            )
    return None


def orientation_witness(layout: GadgetLayout, o: Orientation) -> Solution:
    deleted = set()
    for e, gadget in layout.gadgets.items():
        _, head = o.direction[e]
        deleted.update(norm_edge(head, x) for x in gadget.head_side(head))
    return Solution(frozenset(deleted))


# --- hitting set -------------------------------------------------------------


@dataclass(frozen=True)
class HsInstance:
    universe: int
    sets: tuple[frozenset, ...]
    k: int

    def __post_init__(self):
        sets = tuple(frozenset(a) for a in self.sets)
        for a in sets:
            if not a:
                raise ValueError("hitting-set members must be nonempty")
            if not a <= set(range(1, self.universe + 1)):
                raise ValueError(f"set {sorted(a)} is not inside 1..{self.universe}")
        object.__setattr__(self, "sets", sets)

    def _guard(self):
        if self.universe > HS_GUARD or len(self.sets) > HS_GUARD:
            raise GuardExceeded(f"hitting-set instance exceeds guard {HS_GUARD}")


def petal_length(i: int) -> int:
    return 2 * i + 2


def gen_hs(inst: HsInstance) -> tuple[FlowerHost, ForbiddenFamily, int]:
    inst._guard()
    edges = []
    petals = []
    nxt = 1
    for i in range(1, inst.universe + 1):
        L = petal_length(i)
        ring = (0,) + tuple(range(nxt, nxt + L - 1))
        nxt += L - 1
        cycle = sorted(norm_edge(ring[j], ring[(j + 1) % L]) for j in range(L))
        edges += cycle
        petals.append((L, tuple(cycle)))
    host = FlowerHost(nxt, frozenset(edges), center=0, petals=tuple(petals))
    family = ForbiddenFamily(
        tuple(Flower(tuple(petal_length(i) for i in sorted(a))) for a in inst.sets)
    )
    return host, family, inst.k


def hs_brute_force(inst: HsInstance) -> Optional[frozenset]:
    inst._guard()
    universe = range(1, inst.universe + 1)
    for size in range(min(inst.k, inst.universe) + 1):
        for combo in combinations(universe, size):
            chosen = set(combo)
            if all(a & chosen for a in inst.sets):
                return frozenset(combo)
    return None


def hs_witness(inst: HsInstance, hitting: Iterable[int]) -> Solution:
    host, _, _ = gen_hs(inst)
    petals = dict(host.petals)
    return Solution(frozenset(min(petals[petal_length(i)]) for i in hitting))
