"""Edge deletion to restrict component sizes and forbidden subgraphs."""
from .exact import Solution, branch_cap, brute_force_min, verify
from .forbidden import (
    AllTrees,
    CycleExact,
    Explicit,
    Flower,
    FlowerHost,
    ForbiddenFamily,
    Star,
    cap_family,
    family_free,
)
from .graph import Graph, Orientation, WeightedGraph, connected_components, min_vertex_cover, twin_classes
from .kernel import KernelResult, Verdict, kernelize
from .vc import solve_vc

__all__ = [
    "AllTrees",
    "CycleExact",
    "Explicit",
    "Flower",
    "FlowerHost",
    "ForbiddenFamily",
    "Graph",
    "KernelResult",
    "Orientation",
    "Solution",
    "Star",
    "Verdict",
    "WeightedGraph",
    "branch_cap",
    "brute_force_min",
    "cap_family",
    "connected_components",
    "family_free",
    "kernelize",
    "min_vertex_cover",
    "solve_vc",
    "twin_classes",
    "verify",
]
