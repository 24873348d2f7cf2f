"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line.

The component-cap oracle is ``brute_force_min`` with the ``AllTrees(h + 1)``
family.  Random graphs come from a fixed seed so every run sees the same pool.
"""
import time
from itertools import combinations, product

import pytest

from edgecap.exact import branch_cap, brute_force_min, verify
from edgecap.forbidden import (
    contains_cycle_exact,
    contains_flower,
    contains_star,
    contains_tree_family,
    cap_family,
    cycle_graph,
    family_free,
    flower_graph,
    star_graph,
    subgraph_isomorphic,
)
from edgecap.graph import Graph, WeightedGraph
from edgecap.kernel import Verdict, edge_bound, kernelize, vertex_bound
from edgecap.reductions import (
    HsInstance,
    MmoInstance,
    gen_hs,
    gen_mmo,
    hs_brute_force,
    mmo_brute_force,
    orientation_witness,
)
from edgecap.vc import enumerate_partitions, solve_vc
from graphs_util import all_trees, atlas, eight_vertex_extensions, random_pool, set_partitions

pytestmark = pytest.mark.acceptance

POOL_SEED = 20261016
POOL_SIZE = 500


@pytest.fixture(scope="module")
def pool():
    connected = [g for g in atlas(6, connected_only=True)]
    assert len(connected) == 143
    randoms = random_pool(POOL_SIZE, POOL_SEED, max_n=8)
    assert max(g.n for g in randoms) == 8
    return randoms + connected


def report(log, number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    log.append(line)
    print(line)
    return ok


def oracle_size(g, h):
    return brute_force_min(g, cap_family(h), g.m).size


def test_criterion_1_vc_matches_oracle(pool, criteria_log):
    start = time.perf_counter()
    cases = mismatches = 0
    for g in pool:
        for h in range(1, g.n + 1):
            cases += 1
            sol = solve_vc(g, h)
            if sol.size != oracle_size(g, h) or not verify(g, sol, cap_family(h)):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 300
    assert report(criteria_log, 1, ok,
                  f"{len(pool)} graphs, {cases} (graph, h) cases, {mismatches} mismatches, {elapsed:.1f}s < 300s")


def test_criterion_2_kernel_safety_and_bounds(pool, criteria_log):
    cases = unsafe = violations = false_no = 0
    for g in pool:
        for h in range(1, 5):
            best = oracle_size(g, h)
            for k in range(5):
                cases += 1
                res = kernelize(g, k, h)
                if oracle_size(res.reduced, h) != best:
                    unsafe += 1
                yes = best <= k
                if yes and (res.reduced.n > vertex_bound(k, h) or res.reduced.m > edge_bound(k, h)):
                    violations += 1
                if yes and res.verdict is Verdict.NO_BY_BOUNDS:
                    false_no += 1
    ok = unsafe == violations == false_no == 0
    assert report(criteria_log, 2, ok,
                  f"{cases} cases, {unsafe} answer changes, {violations} bound violations, "
                  f"{false_no} wrong no_by_bounds")


def test_criterion_3_bell_counts(criteria_log):
    ours = [sum(1 for _ in enumerate_partitions(range(s))) for s in range(1, 7)]
    theirs = [sum(1 for _ in set_partitions(range(s))) for s in range(1, 7)]
    ok = ours == theirs == [1, 2, 5, 15, 52, 203]
    assert report(criteria_log, 3, ok, f"counts {ours}, independent {theirs}")


def hs_instances():
    for universe in range(1, 5):
        members = [frozenset(c) for size in range(1, universe + 1)
                   for c in combinations(range(1, universe + 1), size)]
        for count in range(5):
            for sets in combinations(members, count):
                yield universe, sets


def test_criterion_4_hitting_set_equivalence(criteria_log):
    start = time.perf_counter()
    cases = mismatches = 0
    for universe, sets in hs_instances():
        for k in range(4):
            inst = HsInstance(universe, sets, k)
            host, fam, k2 = gen_hs(inst)
            cases += 1
            source_yes = hs_brute_force(inst) is not None
            target_yes = brute_force_min(host, fam, k2) is not None
            if source_yes != target_yes:
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 120
    assert report(criteria_log, 4, ok, f"{cases} instances, {mismatches} mismatches, {elapsed:.1f}s < 120s")


def weighted_inputs():
    """Every weighted graph with at most 3 edges (up to isomorphism of the
    underlying graph, isolated vertices included) and weights 1..3."""
    for g in atlas(6):
        if g.m > 3 or g.n == 0:
            continue
        for ws in product(range(1, 4), repeat=g.m):
            yield WeightedGraph(g, dict(zip(g.edge_list, ws)))


def direct_counts(wg):
    # tallied from the construction's parts, not from the closed forms
    n, omega = wg.n, wg.total_weight
    big_n = n + 3 * omega + 1
    delta = wg.max_weighted_degree()
    pendants = sum(delta - wg.weighted_degree(u) for u in range(n))
    sides = sum(4 * w for w in wg.weight.values())
    red_inner = sum(2 * w * (big_n - 1) for w in wg.weight.values())
    blue_inner = sum(2 * w * (4 * big_n - 3) for w in wg.weight.values())
    vertices = n + pendants + sides + red_inner + blue_inner
    edges = (pendants + sides
             + sum(2 * w * big_n for w in wg.weight.values())
             + sum(2 * w * (4 * big_n - 2) for w in wg.weight.values()))
    return vertices, edges


def test_criterion_5_orientation_reduction(criteria_log):
    yes = failed = structural = total = 0
    for wg in weighted_inputs():
        for r in (3, 4):
            total += 1
            inst = MmoInstance(wg, r)
            g, layout, fam, k = gen_mmo(inst)
            if not ((g.n, g.m) == direct_counts(wg)
                    == (layout.expected_vertex_count(), layout.expected_edge_count())):
                structural += 1
            o = mmo_brute_force(inst)
            if o is None:
                continue
            yes += 1
            sol = orientation_witness(layout, o)
            if sol.size != k or not verify(g, sol, fam):
                failed += 1

    # both directions on the smallest instance: every single deletion
    single = WeightedGraph(Graph(2, frozenset({(0, 1)})), {(0, 1): 1})
    inst = MmoInstance(single, 3)
    g, layout, fam, k = gen_mmo(inst)
    working = [e for e in g.edge_list if family_free(g.without_edges([e]), fam)]
    smallest_ok = (
        (g.n, g.m, k) == (58, 60, 1)
        and not family_free(g, fam)
        and (mmo_brute_force(inst) is not None) == bool(working)
        and all(not contains_cycle_exact(g.without_edges([e]), layout.cycle_length) for e in working)
    )
    ok = failed == structural == 0 and smallest_ok and yes > 0
    assert report(criteria_log, 5, ok,
                  f"{total} instances, {yes} yes, {failed} witness failures, {structural} count mismatches; "
                  f"smallest instance: {len(working)} of {g.m} single deletions work, "
                  f"{'consistent' if smallest_ok else 'INCONSISTENT'}")


def test_criterion_6_engine_agreement(pool, criteria_log):
    cases = mismatches = 0
    for g in pool:
        for h in range(1, g.n + 1):
            cases += 1
            best = oracle_size(g, h)
            vc = solve_vc(g, h).size
            exact = branch_cap(g, h, best)
            below = branch_cap(g, h, best - 1) if best else None
            if vc != best or exact is None or exact.size != best or below is not None:
                mismatches += 1
            elif not verify(g, exact, cap_family(h)):
                mismatches += 1
    ok = mismatches == 0
    assert report(criteria_log, 6, ok, f"{cases} (graph, h) cases, {mismatches} disagreements")


def test_criterion_7_checker_cross_validation(criteria_log):
    stars = {d: star_graph(d) for d in range(1, 8)}
    cycles = {L: cycle_graph(L) for L in range(3, 9)}
    trees = {t: all_trees(t) for t in range(2, 6)}
    checks = mismatches = graphs = 0

    def check(g):
        nonlocal checks, mismatches
        for d, pattern in stars.items():
            checks += 1
            mismatches += contains_star(g, d) != subgraph_isomorphic(pattern, g)
        for L, pattern in cycles.items():
            checks += 1
            mismatches += contains_cycle_exact(g, L) != subgraph_isomorphic(pattern, g)
        for t, ts in trees.items():
            checks += 1
            mismatches += contains_tree_family(g, t) != any(subgraph_isomorphic(T, g) for T in ts)

    for g in atlas(7):
        graphs += 1
        check(g)
    for g in eight_vertex_extensions():
        graphs += 1
        check(g)

    # flower shortcut on every generated host with |U| <= 3
    flower_checks = 0
    for universe in range(1, 4):
        host, _, _ = gen_hs(HsInstance(universe, (), 0))
        lengths = [L for L, _ in host.petals]
        patterns = [
            (set(c), flower_graph(c))
            for size in range(1, universe + 1)
            for c in combinations(lengths, size)
        ]
        deletions = [()] + [(e,) for e in host.edge_list] + list(combinations(host.edge_list, 2))
        for removed in deletions:
            g = host.without_edges(removed)
            for petal_set, pattern in patterns:
                flower_checks += 1
                generic = subgraph_isomorphic(pattern, g, limit=pattern.n)
                mismatches += contains_flower(g, petal_set) != generic
    ok = mismatches == 0
    assert report(criteria_log, 7, ok,
                  f"{graphs} graphs up to 8 vertices, {checks} star/cycle/tree checks, "
                  f"{flower_checks} flower checks, {mismatches} mismatches")
