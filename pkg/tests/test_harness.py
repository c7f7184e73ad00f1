import json
from fractions import Fraction

import pytest

from splitnull.gallery import complete_graph, cycle_graph, support_in_s_example, path_graph
from splitnull.graphs import Graph, write_graph6
from splitnull.harness.catalog import CATALOG, THEOREM_IDS
from splitnull.harness.census import CensusReport, census_verify, square_factors, verify_graph
from splitnull.harness.generators import (
    SplitMix64,
    enumerate_graphs,
    random_graph,
    random_split_graph,
)
from splitnull.harness.oracle import (
    brute_is_split,
    brute_nullity,
    brute_nullspace,
    code_of,
    graph6_from_code,
    graph_from_code,
    oracle_block,
    subset_bitset,
    brute_s_partitions,
)
from splitnull.linalg import QMatrix, rank


# -- oracle ----------------------------------------------------------------------


def test_brute_nullspace_examples():
    assert brute_nullspace(complete_graph(3)).dim == 0
    (v,) = brute_nullspace(path_graph(3)).vectors
    assert v == (-1, 0, 1)
    assert brute_nullity(cycle_graph(4)) == 2


@pytest.mark.parametrize("n", range(0, 6))
def test_code_round_trip(n):
    for code in range(0, 1 << (n * (n - 1) // 2), 7):
        g = graph_from_code(n, code)
        assert code_of(g) == code
        assert graph6_from_code(n, code) == write_graph6(g)


def test_oracle_block_matches_scalar_oracle():
    n = 5
    block = oracle_block(n, 0, 1 << 10)
    for code in range(1 << 10):
        g = graph_from_code(n, code)
        assert bool(block.split[code]) == brute_is_split(g)
        if block.split[code]:
            assert block.partitions[code] == subset_bitset(p.clique for p in brute_s_partitions(g))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 8), (4, 58), (5, 632)])
def test_labeled_split_counts(n, expected):
    block = oracle_block(n, 0, 1 << (n * (n - 1) // 2))
    assert int(block.split.sum()) == expected


# -- generators -------------------------------------------------------------------


def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F,
    ]


def test_random_split_graph_extremes():
    zero = random_split_graph(3, 4, 0, 1)
    assert zero.R == QMatrix.zeros(3, 4)
    one = random_split_graph(3, 4, 1, 1)
    assert one.R == QMatrix.ones(3, 4)


def test_random_split_graph_deterministic():
    a = random_split_graph(5, 6, Fraction(1, 3), 99)
    b = random_split_graph(5, 6, "1/3", 99)
    assert a == b and a.graph == b.graph


@pytest.mark.parametrize("p", [Fraction(-1, 2), Fraction(3, 2), 2])
def test_random_split_graph_bad_probability(p):
    with pytest.raises(ValueError):
        random_split_graph(2, 2, p, 0)


def test_random_split_graph_rejects_float_and_sizes():
    with pytest.raises(TypeError):
        random_split_graph(2, 2, 0.5, 0)
    with pytest.raises(ValueError):
        random_split_graph(0, 2, 0, 0)


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_graphs(2)) == 2
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    split4 = [g for g in enumerate_graphs(4) if brute_is_split(g)]
    assert len(split4) == 58
    assert len(set(enumerate_graphs(4))) == 64


def test_enumerate_cap():
    with pytest.raises(ValueError):
        next(iter(enumerate_graphs(8)))
    with pytest.raises(ValueError):
        next(iter(enumerate_graphs(9, allow_large=True)))


def test_random_graph_density_extremes():
    assert random_graph(5, 0, 3).num_edges == 0
    assert random_graph(5, 1, 3) == complete_graph(5)


# -- census -------------------------------------------------------------------------


def test_catalogue_ids_unique_and_stable():
    assert len(set(THEOREM_IDS)) == len(THEOREM_IDS) == len(CATALOG)
    assert "nullity-formula" in THEOREM_IDS and "square-composition" in THEOREM_IDS


def test_census_n4_clean():
    report = census_verify(4)
    assert report.ok, report.failures()
    assert report.graphs_examined == 1 + 2 + 8 + 64
    assert report.split_count == 1 + 2 + 8 + 58
    assert set(report.theorems) == set(THEOREM_IDS)


def test_census_small_mixed_and_deterministic():
    kwargs = dict(compose_pairs=20, square_max_k=1, random_max_n=10)
    a = census_verify(3, 30, 7, **kwargs)
    b = census_verify(3, 30, 7, **kwargs)
    assert a.ok, a.failures()
    assert a.to_json() == b.to_json()
    assert a.random_split_graphs == 30 and a.composition_pairs == 20 and a.square_pairs == 4


def test_census_json_schema():
    data = json.loads(census_verify(3).to_json())
    assert {"n_range", "graphs_examined", "split_count", "theorems", "counterexamples"} <= set(data)
    assert data["n_range"] == [1, 3]
    assert data["counterexamples"] == []


def test_census_rejects_large_n():
    with pytest.raises(ValueError):
        census_verify(8)


def test_merge_is_associative_and_order_independent():
    parts = [census_verify(n) for n in (2, 3)] + [census_verify(0, 10, 5, random_max_n=8)]
    a, b, c = parts
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    swapped = c.merge(a).merge(b)
    assert left.as_dict() == right.as_dict()
    for key in ("theorems", "counterexamples", "tallies", "graphs_examined"):
        assert left.as_dict()[key] == swapped.as_dict()[key]


def test_failures_are_recorded_not_raised():
    report = CensusReport()
    report.record("nullity-formula", False, "A_")
    report.record("nullity-formula", None, "A_")
    assert not report.ok
    assert report.counterexamples == [["A_", "nullity-formula"]]
    assert report.theorems["nullity-formula"] == {"pass": 0, "fail": 1, "not_applicable": 1}
    again = CensusReport.from_dict(json.loads(report.to_json()))
    assert again.as_dict() == report.as_dict()


def test_open_question_tallies_present():
    report = census_verify(5)
    ones = report.tallies["ones-outside-image-support-in-S"]
    assert ones["examined"] >= ones["hits"] > 0
    assert len(ones["witnesses"]) <= 5


def test_verify_graph_support_in_s_example():
    report = verify_graph(support_in_s_example().split.graph)
    assert report.ok, report.failures()
    assert report.split_count == 1


def test_verify_graph_non_split():
    report = verify_graph(cycle_graph(5))
    assert report.ok and report.split_count == 0


def test_square_factor_count():
    assert len(square_factors(2)) == 2 + 16
