import pytest
from hypothesis import given

from splitnull.gallery import complete_graph, cycle_graph, hexagon_example, support_in_s_example, p3, p4, path_graph
from splitnull.graphs import Graph, complement, twin_classes
from splitnull.harness.oracle import (
    brute_is_split,
    brute_maximum_cliques,
    brute_maximum_independent_sets,
    brute_s_partitions,
)
from splitnull.linalg import QMatrix
from splitnull.split import (
    SPartition,
    SplitGraph,
    all_s_partitions,
    balance_class,
    biadjacency,
    clique_and_independence_numbers,
    closed_form_partitions,
    maximum_cliques,
    maximum_independent_sets,
    recognize_split,
    swing_report,
    threshold_graph,
)

from strategies import graphs, split_graphs

A, B, C, D = range(4)


def fs(*xs):
    return frozenset(xs)


def k3_split():
    return SplitGraph.with_clique(complete_graph(3), [0, 1, 2])


# -- recognition -----------------------------------------------------------------


def test_c4_not_split():
    assert recognize_split(cycle_graph(4)) is None
    assert recognize_split(cycle_graph(5)) is None
    assert recognize_split(Graph(4, [(0, 1), (2, 3)])) is None


def test_p4_partition():
    sp = recognize_split(path_graph(4))
    assert sp.partition == SPartition(fs(B, C), fs(A, D))


def test_hexagon_recognised():
    sp = recognize_split(hexagon_example().split.graph)
    assert sp is not None and sp.k in (5, 6)


def test_invalid_partition_rejected():
    with pytest.raises(ValueError):
        SplitGraph.with_clique(path_graph(4), [0, 1, 2])
    with pytest.raises(ValueError):
        SPartition(fs(0, 1), fs(1, 2))


@given(graphs(max_n=8))
def test_recognition_agrees_with_brute_force(g):
    sp = recognize_split(g)
    assert (sp is not None) == brute_is_split(g)
    if sp is not None:
        assert sp.partition.is_valid_for(g)
        assert recognize_split(complement(g)) is not None


# -- s-partitions and swing vertices -------------------------------------------------


def test_p3_partitions():
    parts = all_s_partitions(p3())
    cliques = {p.clique for p in parts}
    # both partitions drawn for the path, plus the mirror image ({b, c}, {a})
    assert fs(A, B) in cliques and fs(B) in cliques
    assert cliques == {fs(A, B), fs(B), fs(B, C)}


def test_p4_unique_partition():
    assert len(all_s_partitions(p4())) == 1


def test_k3_four_partitions():
    parts = all_s_partitions(k3_split())
    assert len(parts) == 4
    assert SPartition(fs(0, 1, 2), fs()) in parts
    assert sum(len(p.clique) == 2 for p in parts) == 3


@given(split_graphs())
def test_partitions_match_brute_force(sp):
    assert set(all_s_partitions(sp)) == set(brute_s_partitions(sp.graph))


def test_balance_examples():
    assert balance_class(p4()) == "balanced"
    assert balance_class(p3()) == "unbalanced"


@pytest.mark.parametrize("bits", ["0", "01", "0101", "00111", "010011", "0110100"])
def test_threshold_graphs_unbalanced(bits):
    assert balance_class(threshold_graph(bits)) == "unbalanced"


def test_swing_examples():
    rep = swing_report(p3())
    assert rep.W == fs(A, C) and rep.classification == "independent_set"
    assert rep.K_star == fs(B) and rep.S_star == fs()
    assert swing_report(p4()).classification == "empty"
    k3 = swing_report(k3_split())
    assert k3.W == fs(0, 1, 2) and k3.classification == "clique"


@given(split_graphs())
def test_swing_structure(sp):
    rep = swing_report(sp)
    assert rep.K_star | rep.W | rep.S_star == frozenset(range(sp.n))
    assert not (rep.K_star & rep.W or rep.K_star & rep.S_star or rep.W & rep.S_star)
    assert (rep.classification == "empty") == (balance_class(sp) == "balanced")
    assert (len(rep.all_partitions) == 1) == (balance_class(sp) == "balanced")
    if rep.W:
        assert rep.W in twin_classes(sp.graph)
    closed = closed_form_partitions(rep.K_star, rep.S_star, rep.W, rep.classification)
    assert set(closed) == set(rep.all_partitions)


@given(split_graphs())
def test_unbalanced_partition_sizes(sp):
    omega, alpha = clique_and_independence_numbers(sp)
    assert omega + alpha in (sp.n, sp.n + 1)
    if omega + alpha == sp.n + 1:
        for p in all_s_partitions(sp):
            assert (len(p.clique), len(p.independent)) in {(omega, alpha - 1), (omega - 1, alpha)}


# -- maximum cliques and independent sets ----------------------------------------------


def test_p4_maximum_cliques():
    cl = maximum_cliques(p4())
    assert len(cl) == 3 and all(len(c) == 2 for c in cl)
    assert fs(B, C) in cl


def test_p4_balanced_but_clique_not_unique():
    # c... a has degree |K| - 1 = 1, so {a, b} competes with K
    sp = p4()
    assert balance_class(sp) == "balanced"
    assert maximum_cliques(sp) != [frozenset(sp.K)]


def test_p3_and_k3_maximum_independent_sets():
    assert maximum_independent_sets(p3()) == [fs(A, C)]
    assert sorted(maximum_independent_sets(k3_split()), key=sorted) == [fs(0), fs(1), fs(2)]


@given(split_graphs())
def test_maximum_sets_match_brute_force(sp):
    assert set(maximum_cliques(sp)) == set(brute_maximum_cliques(sp.graph))
    assert set(maximum_independent_sets(sp)) == set(brute_maximum_independent_sets(sp.graph))
    if balance_class(sp) == "unbalanced":
        parts = all_s_partitions(sp)
        assert all(any(p.clique == c for p in parts) for c in maximum_cliques(sp))
        assert all(any(p.independent == s for p in parts) for s in maximum_independent_sets(sp))


# -- threshold graphs and biadjacency -------------------------------------------------


def test_threshold_examples():
    t = threshold_graph("0")
    assert t.n == 1 and t.K == () and t.S == (0,)
    t = threshold_graph("01")
    assert t.graph == complete_graph(2) and t.K == (1,) and t.S == (0,)
    t = threshold_graph("0101")
    assert set(t.graph.edges()) == {(0, 1), (0, 3), (1, 3), (2, 3)}


@pytest.mark.parametrize("bad", ["", "1", "012"])
def test_threshold_bad_sequences(bad):
    with pytest.raises(ValueError):
        threshold_graph(bad)


def test_biadjacency_examples():
    assert p3().R == QMatrix([[0], [1]])
    ex = support_in_s_example()
    R = ex.split.R
    rows = [ex.to_labels(ex.split.S[j] for j in range(5) if R[i, j]) for i in range(4)]
    assert rows == [{8, 9}, {6, 7}, {6, 7, 8, 9}, {5, 7, 9}]
    full = SplitGraph.with_clique(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]), [0, 1])
    assert full.R == QMatrix.ones(2, 2)


def test_biadjacency_invalid_partition():
    with pytest.raises(ValueError):
        biadjacency(path_graph(3), SPartition(fs(0, 2), fs(1)))


@given(split_graphs())
def test_block_form(sp):
    A = sp.adjacency()
    k = sp.k
    assert A.submatrix(range(k), range(k)) == QMatrix.ones(k, k) - QMatrix.identity(k)
    assert A.submatrix(range(k), range(k, sp.n)) == sp.R
    assert A.submatrix(range(k, sp.n), range(k, sp.n)) == QMatrix.zeros(sp.s, sp.s)
