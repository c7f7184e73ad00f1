import pytest
import sympy
from hypothesis import given

from splitnull.errors import DomainError
from splitnull.gallery import complete_graph, support_in_s_example, full_support_example, p3, path_graph
from splitnull.graphs import adjacency_matrix
from splitnull.linalg import det_bareiss, rank
from splitnull.nullspace import nullity
from splitnull.determinant import (
    degree_vector,
    det_split_lemma,
    det_split_schur,
    singularity_criterion,
    singularity_form,
)
from splitnull.split import SplitGraph

from strategies import split_graphs


def k3_two_one():
    return SplitGraph.with_clique(complete_graph(3), [0, 1])


def test_p3_determinant_and_criterion():
    assert det_split_schur(p3()) == 0
    assert singularity_form(p3()) == 1
    assert singularity_criterion(p3())


def test_k3_determinant_and_criterion():
    sp = k3_two_one()
    assert degree_vector(sp) == (2,)
    assert det_split_schur(sp) == 2 == det_split_lemma(sp)
    assert singularity_form(sp) == 2
    assert not singularity_criterion(sp)


def test_k3_with_empty_independent_side():
    assert det_split_schur(SplitGraph.with_clique(complete_graph(3), [0, 1, 2])) == 2


def test_full_support_singular():
    sp = full_support_example().split
    assert det_split_schur(sp) == 0
    assert singularity_criterion(sp)


def test_domain_errors():
    single = SplitGraph.with_clique(path_graph(2), [0])
    with pytest.raises(DomainError):
        det_split_schur(single)
    with pytest.raises(DomainError):
        singularity_criterion(support_in_s_example().split)  # nul(R) = 2


@given(split_graphs(min_k=2))
def test_schur_formula_matches_bareiss_and_sympy(sp):
    d = det_split_schur(sp)
    assert d == det_bareiss(sp.adjacency())
    assert d == sympy.Matrix(adjacency_matrix(sp.graph).tolist()).det()


@given(split_graphs(min_k=2))
def test_lemma_form_and_criterion(sp):
    if rank(sp.R) != sp.s:
        return
    assert det_split_lemma(sp) == det_split_schur(sp)
    assert singularity_criterion(sp) == (nullity(sp).nullity > 0)
