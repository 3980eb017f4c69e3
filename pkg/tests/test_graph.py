import json

import pytest
from hypothesis import given, settings

from conftest import connected_graphs, trees
from zdmd.graph import (Graph, GraphError, barycentric_subdivision, bfs_all_pairs, from_edge_list,
                        from_json, is_bipartite, is_connected, is_independent_set, is_path_graph,
                        is_tree, subdivide_edge, to_dot, to_json, tree_legs, tree_metric_dimension)


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(k):
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 0)])
    with pytest.raises(GraphError):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count == 2


def test_bfs_distances_and_sentinel():
    dm = bfs_all_pairs(path(4))
    assert dm.row(0) == (0, 1, 2, 3)
    assert dm.is_connected()
    g = from_edge_list(3, [(0, 1)])
    d = bfs_all_pairs(g)
    assert d[0, 2] == d.unreachable == 3
    assert not d.is_connected()


def test_subdivide_edge():
    g = subdivide_edge(path(2).relabel({0: "x", 1: "y"}), (0, 1))
    assert g.n == 3 and g.edges() == [(0, 2), (1, 2)]
    assert g.name(2) == "x~y"
    with pytest.raises(GraphError):
        subdivide_edge(path(3), (0, 2))


def test_bs_of_single_vertex_is_itself():
    g, mid = barycentric_subdivision(from_edge_list(1, []))
    assert g.n == 1 and g.edge_count == 0 and mid == {}


def test_bs_of_triangle_is_hexagon():
    g, _ = barycentric_subdivision(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    assert g.n == 6 and all(g.degree(v) == 2 for v in range(6))
    assert is_connected(g) and is_bipartite(g)


@given(connected_graphs(max_n=10))
def test_bs_counts_and_bipartite(g):
    bs, mid = barycentric_subdivision(g)
    assert bs.n == g.n + g.edge_count
    assert bs.edge_count == 2 * g.edge_count
    assert is_bipartite(bs)
    assert all(v not in bs.adj[v] for v in range(bs.n))
    for (u, v), w in mid.items():
        assert bs.adj[w] == {u, v}
    # distances double between original vertices
    d, dbs = bfs_all_pairs(g), bfs_all_pairs(bs)
    assert all(dbs[u, v] == 2 * d[u, v] for u in range(g.n) for v in range(g.n))


def test_independent_set():
    g = path(4)
    assert is_independent_set(g, [0, 2])
    assert not is_independent_set(g, [1, 2])
    assert is_independent_set(g, [])
    with pytest.raises(GraphError):
        is_independent_set(g, [7])


def test_predicates():
    assert is_path_graph(path(5)) and is_tree(path(5))
    assert not is_path_graph(star(3))
    assert not is_tree(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_bipartite(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))


def test_tree_formula_small_cases():
    assert tree_metric_dimension(star(4)) == 3
    # spider with three legs of length 2
    spider = from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert tree_legs(spider) == {0: 3}
    assert tree_metric_dimension(spider) == 2
    assert tree_metric_dimension(path(6)) == 1
    assert tree_metric_dimension(path(1)) == 0


def test_tree_legs_errors():
    with pytest.raises(GraphError):
        tree_legs(path(4))
    with pytest.raises(GraphError):
        tree_legs(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))


def test_dot_export():
    g = from_edge_list(3, [(0, 1)], {0: "a_1", 1: "c^1_2", 2: "q_1"})
    text = to_dot(g)
    assert text.startswith("graph G {")
    assert 'a_1 -- "c^1_2";' in text
    assert "q_1;" in text  # isolated vertex still listed


@given(connected_graphs())
def test_json_round_trip(g):
    h = from_json(to_json(g))
    assert h.n == g.n and h.adj == g.adj


def test_json_round_trip_keeps_labels():
    g = from_edge_list(2, [(0, 1)], {0: "x", 1: "y"})
    data = json.loads(to_json(g))
    assert data["edges"] == [[0, 1]]
    assert from_json(to_json(g)).labels == g.labels


def test_subdivide_examples():
    assert is_path_graph(subdivide_edge(path(2), (0, 1)))
    sq = subdivide_edge(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]), (0, 1))
    assert sq.n == 4 and all(sq.degree(v) == 2 for v in range(4))


def test_bs_of_stars_and_k2q():
    from zdmd.ring import zero_divisor_graph
    for q in (3, 5, 7):
        g, _ = barycentric_subdivision(zero_divisor_graph(2 * q))
        assert g.n == 2 * q - 1 and is_tree(g)
    for q in (5, 7, 11):
        h, _ = barycentric_subdivision(zero_divisor_graph(3 * q))
        assert h.n == 3 * q - 1 and h.edge_count == 4 * (q - 1)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=60))
def test_distance_matrix_axioms(g):
    dm = bfs_all_pairs(g)
    for u in range(g.n):
        assert dm[u, u] == 0
        for v in range(g.n):
            assert dm[u, v] == dm[v, u]
            assert (dm[u, v] == 1) == g.has_edge(u, v)
    for u in range(g.n):
        for v in range(g.n):
            for w in g.adj[v]:
                # triangle inequality along every edge is enough for BFS metrics
                assert dm[u, w] <= dm[u, v] + 1
