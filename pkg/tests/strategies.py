"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from splitnull.graphs import Graph
from splitnull.linalg import QMatrix
from splitnull.split import SplitGraph

small_ints = st.integers(-4, 4)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, elements=small_ints, square=False):
    r = draw(st.integers(0, max_rows))
    c = r if square else draw(st.integers(0, max_cols))
    rows = [[draw(elements) for _ in range(c)] for _ in range(r)]
    return QMatrix(rows, cols=c)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def split_graphs(draw, min_k=1, max_k=6, max_s=6):
    """Split graph with a shuffled vertex labelling."""
    k = draw(st.integers(min_k, max_k))
    s = draw(st.integers(0, max_s))
    n = k + s
    perm = draw(st.permutations(range(n)))
    bits = draw(st.lists(st.booleans(), min_size=k * s, max_size=k * s))
    edges = [(perm[i], perm[j]) for i in range(k) for j in range(i + 1, k)]
    edges += [(perm[i], perm[k + j]) for i in range(k) for j in range(s) if bits[i * s + j]]
    return SplitGraph.with_clique(Graph(n, edges), [perm[i] for i in range(k)])
