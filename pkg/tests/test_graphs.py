import pytest
from hypothesis import given

from splitnull.errors import GraphFormatError
from splitnull.gallery import complete_graph, cycle_graph, path_graph
from splitnull.graphs import (
    Graph,
    adjacency_matrix,
    are_twins,
    complement,
    delete_vertex,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent,
    is_threshold,
    isolated_vertices,
    parse_edge_list,
    parse_graph6,
    twin_classes,
    write_edge_list,
    write_graph6,
)
from splitnull.harness.generators import random_graph
from splitnull.linalg import QMatrix

from strategies import graphs


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


# -- graph6 ------------------------------------------------------------------


@pytest.mark.parametrize("text, graph", [
    ("A_", complete_graph(2)),
    ("B?", Graph(3)),
    ("Bw", complete_graph(3)),
])
def test_graph6_examples(text, graph):
    assert parse_graph6(text) == graph
    assert write_graph6(graph) == text


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


@pytest.mark.parametrize("bad", ["", "A", "Ao", "B\x20", "~?"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_long_header_round_trip():
    g = random_graph(70, "1/3", 5)
    text = write_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_round_trip_1000_random():
    for seed in range(1000):
        g = random_graph(seed % 21, "1/2", seed)
        assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_round_trip_property(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    assert write_graph6(parse_graph6(text)) == text


# -- edge lists ----------------------------------------------------------------


def test_edge_list_examples():
    assert parse_edge_list("3\n0 1\n1 2") == path_graph(3)
    assert parse_edge_list("4\n0 1\n1 2\n2 3") == path_graph(4)


def test_edge_list_comments_and_duplicates():
    g = parse_edge_list("# a path\n3\n0 1  # first\n1 0\n2 1\n")
    assert g == path_graph(3)


@pytest.mark.parametrize("text, message", [
    ("2\n0 0", "self-loop"),
    ("2\n0 2", "out of range"),
    ("2\n0 x", "non-integer"),
    ("", "empty"),
    ("2 3\n", "single vertex count"),
])
def test_edge_list_errors(text, message):
    with pytest.raises(GraphFormatError, match=message):
        parse_edge_list(text)


@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


# -- matrices and derived graphs -----------------------------------------------


def test_adjacency_k3():
    assert adjacency_matrix(complete_graph(3)) == QMatrix.ones(3, 3) - QMatrix.identity(3)


def test_adjacency_p3_tridiagonal():
    assert adjacency_matrix(path_graph(3)) == QMatrix([[0, 1, 0], [1, 0, 1], [0, 1, 0]])


def test_adjacency_split_block_form():
    # K = {1, 3}, S = {0, 2}: 0 ~ 1, 2 ~ 1, 2 ~ 3
    g = Graph(4, [(1, 3), (0, 1), (1, 2), (2, 3)])
    A = adjacency_matrix(g, [1, 3, 0, 2])
    assert A == QMatrix([[0, 1, 1, 1], [1, 0, 0, 1], [1, 0, 0, 0], [1, 1, 0, 0]])


def test_adjacency_order_must_be_permutation():
    with pytest.raises(ValueError):
        adjacency_matrix(path_graph(3), [0, 0, 1])


@given(graphs(max_n=7))
def test_adjacency_symmetric_zero_diagonal(g):
    for order in (list(range(g.n)), list(range(g.n))[::-1]):
        A = adjacency_matrix(g, order)
        assert A == A.T
        assert all(A[i, i] == 0 for i in range(g.n))


def test_complement_examples():
    assert complement(complete_graph(3)) == Graph(3)


@given(graphs(max_n=9))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).num_edges + g.num_edges == g.n * (g.n - 1) // 2


def test_induced_subgraph_examples():
    p4 = path_graph(4)
    assert induced_subgraph(p4, [1, 2]) == complete_graph(2)
    assert induced_subgraph(p4, []) == Graph(0)
    with pytest.raises(ValueError):
        induced_subgraph(p4, [4])


@given(graphs(min_n=1, max_n=8))
def test_delete_vertex_matches_induced_subgraph(g):
    for v in range(g.n):
        assert delete_vertex(g, v) == induced_subgraph(g, [u for u in range(g.n) if u != v])


# -- twins and predicates --------------------------------------------------------


def test_twin_class_examples():
    assert twin_classes(complete_graph(4)) == [frozenset(range(4))]
    assert sorted(map(sorted, twin_classes(path_graph(3)))) == [[0, 2], [1]]
    assert len(twin_classes(path_graph(4))) == 4


@given(graphs(max_n=8))
def test_twin_classes_partition_and_shape(g):
    classes = twin_classes(g)
    assert sorted(v for c in classes for v in c) == list(range(g.n))
    for c in classes:
        assert is_clique(g, c) or is_independent(g, c)
        assert all(are_twins(g, u, v) for u in c for v in c)


def test_connectivity_and_isolated():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(3, [(0, 1)]))
    assert isolated_vertices(Graph(3, [(0, 1)])) == frozenset({2})


def test_threshold_recognition():
    assert is_threshold(path_graph(3))
    assert not is_threshold(path_graph(4))
    assert not is_threshold(cycle_graph(4))
