"""Command-line entry point.

Exit codes: 0 completed, 1 internal error, 2 usage or input error,
3 enumeration guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from .errors import EdgecapError, GuardExceeded, ParseError
from .exact import Solution, branch_cap, brute_force_min, verify
from .forbidden import FlowerHost, ForbiddenFamily, cap_family
from .graph import Graph, WeightedGraph, norm_edge
from .io import load_graph, load_weighted, write_graph
from .kernel import Verdict, kernelize
from .reductions import HsInstance, MmoInstance, gen_hs, gen_mmo
from .vc import solve_vc

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class UsageError(EdgecapError):
    pass


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Parse ``"u v;u v;..."``."""
    edges = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split()
        if len(parts) != 2:
            raise UsageError(f"bad edge {chunk!r}; expected 'u v'")
        try:
            edges.append(norm_edge(int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"bad edge {chunk!r}") from None
    return edges


def flower_host_from_layout(g: Graph, layout: dict) -> FlowerHost:
    petals = []
    for p in layout["petals"]:
        edges = tuple(sorted(norm_edge(*e) for e in p["edges"]))
        petals.append((p["length"], edges))
    return FlowerHost(g.n, g.edges, center=layout["center"], petals=tuple(petals))


def to_dot(g: Graph, deleted: frozenset) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    for u, v in g.edge_list:
        style = ' [style=dashed, color=red]' if (u, v) in deleted else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _edges_json(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


# --- subcommands -------------------------------------------------------------


def _load_family(args, g: Graph) -> tuple[ForbiddenFamily, Graph]:
    if args.family:
        fam = ForbiddenFamily.from_json(Path(args.family).read_text(encoding="utf-8"))
    elif args.h is not None:
        fam = cap_family(args.h)
    else:
        raise UsageError("need --family or --h")
    if getattr(args, "flower_layout", None):
        layout = json.loads(Path(args.flower_layout).read_text(encoding="utf-8"))
        g = flower_host_from_layout(g, layout)
    return fam, g


def cmd_solve(args) -> dict:
    if args.h is None or args.h < 1:
        raise UsageError("solve needs --h >= 1")
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be >= 0")
    g = load_graph(args.graph)
    h, k = args.h, args.k
    start = time.perf_counter()
    kr = kernelize(g, k if k is not None else 0, h, check_bounds=k is not None)
    stats: dict = {
        "kernel_removed_components": len(kr.removed_components),
        "kernel_vertices": kr.reduced.n,
        "kernel_edges": kr.reduced.m,
    }
    report = {
        "engine": args.engine,
        "h": h,
        "k": k,
        "verdict": kr.verdict.value,
        "stats": stats,
    }
    if kr.verdict is Verdict.NO_BY_BOUNDS:
        report.update(answer="no", k_min=None, deleted_edges=[])
        return _finish(report, start, args)

    reduced = kr.reduced
    k_min: Optional[int] = None
    sol: Optional[Solution]
    if args.engine == "vc":
        sol = solve_vc(reduced, h, stats=stats)
        k_min = sol.size
    elif args.engine == "branch":
        sol = branch_cap(reduced, h, k if k is not None else reduced.m, stats=stats)
    else:
        sol = brute_force_min(reduced, cap_family(h), k if k is not None else reduced.m)
    if sol is not None:
        k_min = sol.size
    if sol is None or (k is not None and sol.size > k):
        report.update(answer="no", k_min=k_min, deleted_edges=[])
        return _finish(report, start, args)

    lifted = Solution(frozenset(kr.lift_edge(e) for e in sol.deleted_edges))
    if not verify(g, lifted, cap_family(h)):
        raise RuntimeError("engine returned a witness that does not verify")
    report.update(answer="yes", k_min=k_min, deleted_edges=_edges_json(lifted.deleted_edges))
    if args.dot:
        Path(args.dot).write_text(to_dot(g, lifted.deleted_edges), encoding="utf-8")
    return _finish(report, start, args)


def _finish(report: dict, start: float, args) -> dict:
    report["millis"] = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    return report


def cmd_oracle(args) -> dict:
    g = load_graph(args.graph)
    fam, g = _load_family(args, g)
    k_max = args.k if args.k is not None else g.m
    start = time.perf_counter()
    sol = brute_force_min(g, fam, k_max)
    report = {
        "engine": "brute",
        "answer": "yes" if sol is not None else "no",
        "k_min": sol.size if sol is not None else None,
        "deleted_edges": _edges_json(sol.deleted_edges) if sol is not None else [],
    }
    return _finish(report, start, args)


def cmd_verify(args) -> dict:
    g = load_graph(args.graph)
    fam, g = _load_family(args, g)
    sol = Solution.of(parse_edge_list(args.delete))
    return {"valid": verify(g, sol, fam), "deleted_edges": _edges_json(sol.deleted_edges)}


def cmd_kernelize(args) -> dict:
    if args.h is None or args.k is None:
        raise UsageError("kernelize needs --h and --k")
    if args.h < 1 or args.k < 0:
        raise UsageError("need --h >= 1 and --k >= 0")
    g = load_graph(args.graph)
    kr = kernelize(g, args.k, args.h)
    text = write_graph(kr.reduced)
    sidecar = {
        "removed": [sorted(c) for c in kr.removed_components],
        "verdict": kr.verdict.value,
        "labels": list(kr.labels),
    }
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.sidecar:
        Path(args.sidecar).write_text(json.dumps(sidecar, sort_keys=True) + "\n", encoding="utf-8")
    return {**sidecar, "reduced": text}


def cmd_generate_mmo(args) -> dict:
    wg: WeightedGraph = load_weighted(args.graph)
    g, layout, fam, k = gen_mmo(MmoInstance(wg, args.r))
    files = _write_instance(args.out, g, fam, layout.to_dict())
    return {"n": g.n, "m": g.m, "k": k, "family": json.loads(fam.to_json()), "files": files}


def cmd_generate_hs(args) -> dict:
    try:
        sets = json.loads(args.sets)
        inst = HsInstance(args.universe, tuple(frozenset(s) for s in sets), args.k)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad hitting-set instance: {exc}") from None
    host, fam, k = gen_hs(inst)
    layout = {
        "center": host.center,
        "petals": [
            {"element": i, "length": L, "edges": [list(e) for e in edges]}
            for i, (L, edges) in enumerate(host.petals, 1)
        ],
    }
    files = _write_instance(args.out, host, fam, layout)
    return {"n": host.n, "m": host.m, "k": k, "family": json.loads(fam.to_json()), "files": files}


def _write_instance(prefix, g: Graph, fam: ForbiddenFamily, layout: dict) -> dict:
    if not prefix:
        return {}
    paths = {
        "graph": f"{prefix}.graph.txt",
        "family": f"{prefix}.family.json",
        "layout": f"{prefix}.layout.json",
    }
    Path(paths["graph"]).write_text(write_graph(g), encoding="utf-8")
    Path(paths["family"]).write_text(fam.to_json() + "\n", encoding="utf-8")
    Path(paths["layout"]).write_text(json.dumps(layout, sort_keys=True) + "\n", encoding="utf-8")
    return paths


# --- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgecap",
        description="Edge deletion to cap component sizes and avoid forbidden subgraphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="print exactly one JSON document")
    out.add_argument("--quiet", action="store_true", help="print nothing; rely on the exit code")
    common.add_argument("--seed", type=int, help="recorded in the report; solvers use no randomness")
    common.add_argument("--timing", action="store_true", help="report wall-clock milliseconds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="decide or minimise the component-cap problem")
    p.add_argument("--graph", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, help="decide whether k deletions suffice; omit to minimise")
    p.add_argument("--engine", choices=("vc", "branch", "brute"), default="vc")
    p.add_argument("--dot", help="write the graph with deleted edges marked as DOT")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", parents=[common], help="remove components of size <= h")
    p.add_argument("--graph", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the reduced graph here")
    p.add_argument("--sidecar", help="write {removed, verdict, labels} JSON here")
    p.set_defaults(func=cmd_kernelize)

    for name, func, helptext in (
        ("oracle", cmd_oracle, "exhaustive minimum deletion for any family"),
        ("verify", cmd_verify, "check a deletion set against a family"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--graph", required=True)
        p.add_argument("--family", help="family descriptor JSON file")
        p.add_argument("--h", type=int, help="shorthand for the component-cap family")
        p.add_argument("--flower-layout", help="layout JSON from generate-hs (needed for flower families)")
        if name == "oracle":
            p.add_argument("--k", type=int, help="largest deletion set to try")
        else:
            p.add_argument("--delete", required=True, help='edges to delete, "u v;u v;..."')
        p.set_defaults(func=func)

    p = sub.add_parser("generate-mmo", parents=[common], help="build the outdegree-orientation gadget instance")
    p.add_argument("--graph", required=True, help="weighted graph file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", help="output prefix for .graph.txt/.family.json/.layout.json")
    p.set_defaults(func=cmd_generate_mmo)

    p = sub.add_parser("generate-hs", parents=[common], help="build the hitting-set flower instance")
    p.add_argument("--universe", type=int, required=True)
    p.add_argument("--sets", required=True, help="JSON list of lists, e.g. '[[1,2],[2,3]]'")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="output prefix for .graph.txt/.family.json/.layout.json")
    p.set_defaults(func=cmd_generate_hs)
    return parser


def _human(report: dict) -> str:
    if report["command"] == "kernelize":
        return report["reduced"].rstrip("\n")
    if report["command"] == "verify":
        return "true" if report["valid"] else "false"
    lines = []
    for key in ("answer", "k_min", "verdict", "deleted_edges", "n", "m", "k", "files"):
        if report.get(key) is not None:
            lines.append(f"{key}: {report[key]}")
    return "\n".join(lines)


def run(argv: Optional[list[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.timing = getattr(args, "timing", False)
    try:
        report = args.func(args)
    except GuardExceeded as exc:
        print(f"edgecap: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, ParseError, EdgecapError, OSError, ValueError) as exc:
        print(f"edgecap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"edgecap: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    report["command"] = args.command
    report["argv"] = list(argv) if argv is not None else sys.argv[1:]
    if args.seed is not None:
        report["seed"] = args.seed
    if args.json:
        stdout.write(json.dumps(report, sort_keys=True) + "\n")
    elif not args.quiet:
        stdout.write(_human(report) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
