from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgecap.errors import (
    DuplicateEdgeError,
    GraphError,
    InvalidCoverError,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
    WeightError,
)
from edgecap.forbidden import complete_graph, path_graph, star_graph
from edgecap.graph import (
    Graph,
    Orientation,
    WeightedGraph,
    connected_components,
    is_vertex_cover,
    min_vertex_cover,
    twin_classes,
)
from edgecap.io import read_graph, read_weighted, write_graph, write_weighted
from graphs_util import uf_components


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


def test_graph_normalises_and_validates():
    g = Graph(3, frozenset({(2, 0), (1, 2)}))
    assert g.edge_list == ((0, 2), (1, 2))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_without_edges_rejects_missing():
    g = path_graph(3)
    assert g.without_edges([(1, 0)]).edges == {(1, 2)}
    with pytest.raises(GraphError):
        g.without_edges([(0, 2)])


# --- components --------------------------------------------------------------


def test_components_examples():
    assert connected_components(Graph(0)) == []
    assert connected_components(path_graph(5)) == [{0, 1, 2, 3, 4}]
    k3_plus = Graph(4, frozenset({(0, 1), (1, 2), (0, 2)}))
    assert connected_components(k3_plus) == [{0, 1, 2}, {3}]


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_components_match_union_find(g):
    comps = connected_components(g)
    assert sum(len(c) for c in comps) == g.n
    assert {frozenset(c) for c in comps} == uf_components(g)


# --- twin classes ------------------------------------------------------------


def test_twin_classes_star():
    tc = twin_classes(star_graph(4), {0})
    assert tc.classes == ((frozenset({0}), (1, 2, 3, 4)),)


def test_twin_classes_two_signatures():
    s1, s2, a, b, c = range(5)
    g = Graph(5, frozenset({(s1, a), (s1, b), (s1, c), (s2, c)}))
    tc = twin_classes(g, {s1, s2})
    assert tc.classes == (
        (frozenset({s1}), (a, b)),
        (frozenset({s1, s2}), (c,)),
    )


def test_twin_classes_edgeless():
    tc = twin_classes(Graph(4), set())
    assert tc.classes == ((frozenset(), (0, 1, 2, 3)),)


def test_twin_classes_rejects_non_cover():
    with pytest.raises(InvalidCoverError):
        twin_classes(path_graph(4), {1})


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.data())
def test_twin_classes_refine_by_neighbourhood(g, data):
    cover = set(range(g.n)) - set(
        data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n))
    )
    # grow to a genuine cover
    cover |= {u for u, v in g.edges if u not in cover and v not in cover}
    tc = twin_classes(g, cover)
    members = [v for _, ms in tc.classes for v in ms]
    assert sorted(members) == sorted(set(range(g.n)) - cover)
    assert len(tc.classes) <= min(len(members), 2 ** len(cover)) or not members
    label = {v: i for i, (_, ms) in enumerate(tc.classes) for v in ms}
    for x, y in combinations(members, 2):
        assert (label[x] == label[y]) == (g.adj[x] == g.adj[y])
    for sig, ms in tc.classes:
        assert all(g.adj[v] == sig for v in ms)


# --- vertex cover ------------------------------------------------------------


def exhaustive_min_cover(g):
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if is_vertex_cover(g, combo):
                return frozenset(combo)


def test_min_vertex_cover_examples():
    assert min_vertex_cover(complete_graph(3), 3) == {0, 1}
    assert min_vertex_cover(path_graph(3), 1) == {1}
    assert min_vertex_cover(Graph(3), 0) == frozenset()
    assert min_vertex_cover(complete_graph(4), 2) is None


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_min_vertex_cover_is_minimum_and_lexicographic(g):
    cover = min_vertex_cover(g, g.n)
    assert is_vertex_cover(g, cover)
    # combinations() yields size-ordered lexicographic subsets, so the first
    # hit is the lexicographically smallest minimum cover
    assert cover == exhaustive_min_cover(g)


# --- weighted graphs and orientations ------------------------------------------


def test_weighted_degrees():
    g = Graph(4, frozenset({(0, 1), (1, 2), (0, 3), (2, 3)}))
    wg = WeightedGraph(g, {(0, 1): 1, (1, 2): 3, (0, 3): 2, (2, 3): 2})
    assert wg.total_weight == 8
    assert [wg.weighted_degree(v) for v in range(4)] == [3, 4, 5, 4]
    assert wg.max_weighted_degree() == 5
    o = Orientation({(0, 1): (0, 1), (1, 2): (1, 2), (0, 3): (3, 0), (2, 3): (2, 3)})
    assert [o.out_weight(wg, v) for v in range(4)] == [1, 3, 2, 2]
    assert [o.in_weight(wg, v) for v in range(4)] == [2, 1, 3, 2]


def test_weighted_graph_rejects_bad_weights():
    g = path_graph(2)
    with pytest.raises(GraphError):
        WeightedGraph(g, {(0, 1): 0})
    with pytest.raises(GraphError):
        WeightedGraph(g, {})


# --- text format -----------------------------------------------------------------


def test_read_examples():
    assert read_graph("3 2\n0 1\n1 2\n") == path_graph(3)
    wg = read_weighted("2 1\n0 1 4\n")
    assert wg.weight == {(0, 1): 4}
    assert read_graph("# comment\n3 1\n# another\n2 0\n").edges == {(0, 2)}


@pytest.mark.parametrize(
    "text, error",
    [
        ("2 1\n0 0\n", SelfLoopError),
        ("x 1\n0 1\n", MalformedHeaderError),
        ("2\n", MalformedHeaderError),
        ("2 2\n0 1\n", MalformedHeaderError),
        ("2 1\n0 2\n", VertexRangeError),
        ("3 2\n0 1\n1 0\n", DuplicateEdgeError),
        ("3 1\n0 1 2\n", MalformedEdgeError),
        ("", MalformedHeaderError),
    ],
)
def test_read_errors(text, error):
    with pytest.raises(error):
        read_graph(text)


def test_read_weighted_errors():
    with pytest.raises(WeightError):
        read_weighted("2 1\n0 1 0\n")
    with pytest.raises(MalformedEdgeError):
        read_weighted("2 1\n0 1\n")


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_round_trip(g):
    assert read_graph(write_graph(g)) == g


@settings(max_examples=50, deadline=None)
@given(graphs(), st.data())
def test_weighted_round_trip(g, data):
    weights = {e: data.draw(st.integers(1, 9)) for e in g.edge_list}
    wg = WeightedGraph(g, weights)
    assert read_weighted(write_weighted(wg)) == wg
