"""Worked example graphs with their conventional vertex labels.

Vertex ids are 0-based; ``labels[v]`` is the label the vertex carries in the
drawings (1-based where the drawing numbers its vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .split import SplitGraph

__all__ = [
    "LabelledSplit",
    "hexagon_example",
    "support_in_s_example",
    "full_support_example",
    "missed_vertex_example",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "p3",
    "p4",
]


@dataclass(frozen=True)
class LabelledSplit:
    split: SplitGraph
    labels: tuple

    def to_labels(self, vertices) -> set:
        return {self.labels[v] for v in vertices}

    def from_labels(self, labels) -> set:
        pos = {lab: v for v, lab in enumerate(self.labels)}
        return {pos[lab] for lab in labels}


def _from_labelled_edges(labels, clique_labels, edges) -> LabelledSplit:
    pos = {lab: v for v, lab in enumerate(labels)}
    g = Graph(len(labels), [(pos[a], pos[b]) for a, b in edges])
    return LabelledSplit(SplitGraph.with_clique(g, [pos[x] for x in clique_labels]), tuple(labels))


def _clique_edges(labels):
    return [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]]


def _star_edges(adjacency: dict):
    return [(a, b) for a, nbrs in adjacency.items() for b in nbrs]


def hexagon_example() -> LabelledSplit:
    """Six-clique with four pendant-ish independent vertices; one clique vertex is drawn white.

    Labels: ``k0..k5`` for the hexagon, ``s1..s4`` for the outer vertices.  The
    drawn partition puts ``k5`` on the independent side, which makes it swing.
    """
    ks = [f"k{i}" for i in range(6)]
    ss = [f"s{i}" for i in range(1, 5)]
    edges = _clique_edges(ks) + _star_edges(
        {"s3": ["k1", "k0"], "s4": ["k0"], "s1": ["k2", "k3", "k4"]}
    )
    return _from_labelled_edges(ks + ss, ks[:5], edges)


def support_in_s_example() -> LabelledSplit:
    """Support inside ``S`` although the all-ones vector is not in ``im(R)``."""
    K = [1, 2, 3, 4]
    edges = _clique_edges(K) + _star_edges(
        {5: [4], 6: [2, 3], 7: [2, 3, 4], 8: [1, 3], 9: [1, 3, 4]}
    )
    return _from_labelled_edges(list(range(1, 10)), K, edges)


def full_support_example() -> LabelledSplit:
    """Nullity one with every vertex supported; clique labels 1..6, independent 7..10."""
    K = [1, 2, 3, 4, 5, 6]
    edges = _clique_edges(K) + _star_edges(
        {1: [7, 8, 9], 2: [8, 9, 10], 3: [9], 4: [7, 10], 5: [8], 6: [8]}
    )
    return _from_labelled_edges(list(range(1, 11)), K, edges)


def missed_vertex_example() -> LabelledSplit:
    """Nullity one with clique vertex 2 outside the support."""
    K = [1, 2, 3, 4, 5]
    edges = _clique_edges(K) + _star_edges(
        {1: [6], 2: [6, 7, 8, 9], 3: [7], 4: [9], 5: [6, 7, 9]}
    )
    return _from_labelled_edges(list(range(1, 10)), K, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def p3() -> SplitGraph:
    """``a - b - c`` with ``K = {a, b}``."""
    return SplitGraph.with_clique(path_graph(3), [0, 1])


def p4() -> SplitGraph:
    """``a - b - c - d`` with the middle edge as clique."""
    return SplitGraph.with_clique(path_graph(4), [1, 2])
