import pytest
from hypothesis import given

from madcolor.errors import GraphError
from madcolor.generators import star
from madcolor.graph import EdgeSubset, build_graph, strip_isolated, subgraph_of_edges

from .strategies import graphs


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.vertex_count == 3
    assert g.edge_count == 3
    assert g.max_degree == 2
    assert g.edge(2) == (0, 2)
    assert list(g.neighbors(0)) == [1, 2]


def test_build_star_degrees():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert g.max_degree == 3
    assert g.degrees() == [3, 1, 1, 1]


@pytest.mark.parametrize(
    "n, pairs",
    [
        (2, [(0, 1), (1, 0)]),
        (2, [(1, 1)]),
        (2, [(0, 2)]),
    ],
)
def test_build_rejects(n: int, pairs: list[tuple[int, int]]):
    with pytest.raises(GraphError) as exc_info:
        build_graph(n, pairs)
    assert exc_info.value.pair == pairs[-1]


def test_subgraph_of_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    sub, id_map = subgraph_of_edges(g, EdgeSubset.of([0, 1]))
    assert sub.edge_count == 2
    assert sub.vertex_count == 3
    assert id_map == [0, 1]
    assert sub.max_degree == 2


def test_subgraph_keep_all_is_identity():
    g = star(5)
    sub, id_map = subgraph_of_edges(g, g.all_edges())
    assert sub == g
    assert id_map == list(range(g.edge_count))


def test_subgraph_keep_nothing():
    sub, id_map = subgraph_of_edges(star(3), [])
    assert sub.vertex_count == 4
    assert sub.edge_count == 0
    assert id_map == []


def test_subgraph_unknown_edge():
    with pytest.raises(GraphError):
        subgraph_of_edges(star(3), [3])


def test_strip_isolated():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3)])
    stripped, vertex_map = strip_isolated(g)
    assert stripped == star(3)
    assert vertex_map == [0, 1, 2, 3]

    empty, vertex_map = strip_isolated(build_graph(5, []))
    assert empty.vertex_count == 0
    assert vertex_map == []

    triangle = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert strip_isolated(triangle)[0] is triangle


def test_strip_isolated_keeps_edge_ids():
    g = build_graph(6, [(1, 3), (3, 5), (1, 5)])
    stripped, vertex_map = strip_isolated(g)
    for e, u, v in stripped.edges():
        assert (vertex_map[u], vertex_map[v]) == g.edge(e)


@given(graphs())
def test_adjacency_matches_endpoints(g):
    assert sum(g.degrees()) == 2 * g.edge_count
    for e, u, v in g.edges():
        assert (v, e) in g.adjacency[u]
        assert (u, e) in g.adjacency[v]
        assert g.other(e, u) == v
