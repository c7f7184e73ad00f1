"""Split graphs: recognition, s-partitions, swing vertices, extremal sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    VertexSet,
    adjacency_matrix,
    complement,
    is_clique,
    is_independent,
    mask_of,
    members,
)
from .linalg import QMatrix

__all__ = [
    "SPartition",
    "SplitGraph",
    "SwingReport",
    "recognize_split",
    "all_s_partitions",
    "closed_form_partitions",
    "clique_and_independence_numbers",
    "balance_class",
    "swing_report",
    "maximum_cliques",
    "maximum_independent_sets",
    "threshold_graph",
    "biadjacency",
]


@dataclass(frozen=True)
class SPartition:
    clique: VertexSet
    independent: VertexSet

    def __post_init__(self):
        object.__setattr__(self, "clique", frozenset(self.clique))
        object.__setattr__(self, "independent", frozenset(self.independent))
        if self.clique & self.independent:
            raise ValueError("clique and independent set overlap")

    def is_valid_for(self, g: Graph) -> bool:
        return (
            self.clique | self.independent == frozenset(range(g.n))
            and is_clique(g, self.clique)
            and is_independent(g, self.independent)
        )

    def sort_key(self) -> tuple:
        return (-len(self.clique), sorted(self.clique))

    def as_dict(self) -> dict:
        return {"K": sorted(self.clique), "S": sorted(self.independent)}


@dataclass(frozen=True)
class SplitGraph:
    """A graph together with one s-partition and its biadjacency matrix ``R``.

    ``R[i][j] = 1`` iff ``K[i] ~ S[j]`` with ``K`` and ``S`` in sorted order.
    """

    graph: Graph
    partition: SPartition
    R: QMatrix = field(init=False, compare=False, repr=False)
    K: tuple = field(init=False, compare=False, repr=False)
    S: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.partition.is_valid_for(self.graph):
            raise ValueError("not an s-partition of this graph")
        K = tuple(sorted(self.partition.clique))
        S = tuple(sorted(self.partition.independent))
        adj = self.graph.adj
        R = QMatrix._wrap(tuple(tuple(adj[u] >> v & 1 for v in S) for u in K), len(K), len(S))
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "R", R)

    @classmethod
    def with_clique(cls, graph: Graph, clique: Iterable[int]) -> "SplitGraph":
        clique = frozenset(clique)
        return cls(graph, SPartition(clique, frozenset(range(graph.n)) - clique))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def k(self) -> int:
        return len(self.K)

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def order(self) -> tuple:
        """Vertex order (K, S) used for block matrices and kernel vectors."""
        return self.K + self.S

    def adjacency(self) -> QMatrix:
        """``[[J - I, R], [R^t, 0]]``."""
        return adjacency_matrix(self.graph, self.order)


@dataclass(frozen=True)
class SwingReport:
    W: VertexSet
    K_star: VertexSet
    S_star: VertexSet
    classification: str
    all_partitions: tuple

    def as_dict(self) -> dict:
        return {
            "W": sorted(self.W),
            "K_star": sorted(self.K_star),
            "S_star": sorted(self.S_star),
            "classification": self.classification,
            "partitions": [p.as_dict() for p in self.all_partitions],
        }


def _valid(g: Graph, kmask: int) -> bool:
    full = (1 << g.n) - 1
    smask = full & ~kmask
    adj = g.adj
    m = kmask
    while m:
        low = m & -m
        m ^= low
        if (adj[low.bit_length() - 1] | low) & kmask != kmask:
            return False
    m = smask
    while m:
        low = m & -m
        m ^= low
        if adj[low.bit_length() - 1] & smask:
            return False
    return True


def recognize_split(g: Graph) -> SplitGraph | None:
    """Split recognition by the splittance degree test.

    Sort degrees ``d1 >= ... >= dn`` (ties by vertex id), take
    ``m = max{i : d_i >= i - 1}``; the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``, and then the ``m`` top
    vertices form the clique side.
    """
    n = g.n
    if n == 0:
        return SplitGraph.with_clique(g, ())
    deg = g.degrees()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i for i in range(1, n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    kmask = mask_of(order[:m])
    if not _valid(g, kmask):
        kmask = _repair(g, kmask, deg)
    return SplitGraph.with_clique(g, members(kmask))


def _repair(g: Graph, kmask: int, deg: list[int]) -> int:
    # Swap a clique-side vertex with a degree-tied independent-side vertex.
    kside = members(kmask)
    sside = [v for v in range(g.n) if not kmask >> v & 1]
    for u in kside:
        for v in sside:
            if deg[u] == deg[v]:
                cand = kmask & ~(1 << u) | 1 << v
                if _valid(g, cand):
                    return cand
    raise AssertionError("splittance test passed but no s-partition was found")


def all_s_partitions(sp: SplitGraph) -> list[SPartition]:
    """Every s-partition of ``sp.graph``.

    Any other s-partition moves at most one vertex out of each side
    (a clique meets an independent set in at most one vertex), so it is
    enough to verify the O(n^2) one-move and swap candidates.
    """
    g = sp.graph
    kmask = mask_of(sp.K)
    cands = {kmask}
    for w in sp.K:
        cands.add(kmask & ~(1 << w))
    for x in sp.S:
        cands.add(kmask | 1 << x)
        for w in sp.K:
            cands.add(kmask & ~(1 << w) | 1 << x)
    full = frozenset(range(g.n))
    out = []
    for c in cands:
        if _valid(g, c):
            K = frozenset(members(c))
            out.append(SPartition(K, full - K))
    return sorted(out, key=SPartition.sort_key)


def closed_form_partitions(
    K_star: Iterable[int], S_star: Iterable[int], W: Iterable[int], classification: str
) -> list[SPartition]:
    """The s-partition catalogue implied by ``(K*, S*, W)`` and the shape of ``W``."""
    Ks, Ss, W = frozenset(K_star), frozenset(S_star), frozenset(W)
    if classification == "empty":
        parts = [SPartition(Ks, Ss)]
    elif classification == "singleton":
        parts = [SPartition(Ks | W, Ss), SPartition(Ks, Ss | W)]
    elif classification == "clique":
        parts = [SPartition(Ks | W, Ss)] + [
            SPartition(Ks | (W - {w}), Ss | {w}) for w in W
        ]
    elif classification == "independent_set":
        parts = [SPartition(Ks, Ss | W)] + [
            SPartition(Ks | {w}, Ss | (W - {w})) for w in W
        ]
    else:
        raise ValueError(f"unknown classification {classification!r}")
    return sorted(parts, key=SPartition.sort_key)


def clique_and_independence_numbers(sp: SplitGraph) -> tuple[int, int]:
    """``(omega, alpha)`` read off one s-partition.

    omega gains one over ``|K|`` exactly when some independent vertex sees all
    of ``K``; alpha gains one over ``|S|`` exactly when some clique vertex has
    no independent neighbour.
    """
    adj = sp.graph.adj
    kmask = mask_of(sp.K)
    smask = mask_of(sp.S)
    omega = sp.k + any(adj[v] == kmask for v in sp.S)
    alpha = sp.s + any(not adj[w] & smask for w in sp.K)
    return omega, alpha


def balance_class(sp: SplitGraph) -> str:
    omega, alpha = clique_and_independence_numbers(sp)
    if omega + alpha == sp.n:
        return "balanced"
    if omega + alpha == sp.n + 1:
        return "unbalanced"
    raise AssertionError(f"omega + alpha = {omega + alpha} for n = {sp.n}")


def swing_report(sp: SplitGraph) -> SwingReport:
    parts = all_s_partitions(sp)
    everywhere = frozenset(range(sp.n))
    in_some_clique = frozenset().union(*(p.clique for p in parts))
    in_some_indep = frozenset().union(*(p.independent for p in parts))
    K_star = everywhere.intersection(*(p.clique for p in parts))
    S_star = everywhere.intersection(*(p.independent for p in parts))
    W = in_some_clique & in_some_indep
    if not W:
        kind = "empty"
    elif len(W) == 1:
        kind = "singleton"
    elif is_clique(sp.graph, W):
        kind = "clique"
    elif is_independent(sp.graph, W):
        kind = "independent_set"
    else:
        raise AssertionError(f"swing set {sorted(W)} is neither a clique nor independent")
    return SwingReport(W, K_star, S_star, kind, tuple(parts))


def maximum_cliques(sp: SplitGraph) -> list[VertexSet]:
    """All maximum cliques: the best of ``K`` and the closed neighbourhoods ``N[v]``, v in S."""
    g = sp.graph
    cands = {frozenset(sp.K)}
    for v in sp.S:
        cands.add(g.neighbors(v) | {v})
    best = max(len(c) for c in cands)
    return sorted((c for c in cands if len(c) == best), key=sorted)


def maximum_independent_sets(sp: SplitGraph) -> list[VertexSet]:
    dual = SplitGraph(complement(sp.graph), SPartition(sp.partition.independent, sp.partition.clique))
    return maximum_cliques(dual)


def threshold_graph(bits: str | Sequence[int]) -> SplitGraph:
    """Threshold graph from a creation sequence.

    Vertex ``i`` is added isolated when ``bits[i] == 0`` and dominating when
    ``bits[i] == 1``; ``bits[0]`` must be 0.  The clique side is the set of
    dominating vertices.
    """
    seq = [int(b) for b in bits]
    if not seq:
        raise ValueError("empty creation sequence")
    if seq[0] != 0:
        raise ValueError("creation sequence must start with 0")
    if any(b not in (0, 1) for b in seq):
        raise ValueError("creation sequence must be binary")
    edges = [(u, v) for v, b in enumerate(seq) if b for u in range(v)]
    g = Graph(len(seq), edges)
    return SplitGraph.with_clique(g, [v for v, b in enumerate(seq) if b])


def biadjacency(g: Graph, p: SPartition) -> QMatrix:
    if not p.is_valid_for(g):
        raise ValueError("invalid s-partition")
    return SplitGraph(g, p).R
