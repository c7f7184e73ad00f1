"""Deterministic graph generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit mixer), chosen
because it is a few lines in any language, so a seed reproduces the same
graphs across implementations.  A Bernoulli(p) draw takes the top 53 bits
``u`` of the next output and succeeds iff ``u < p * 2^53``, compared exactly
in rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from ..graphs import Graph
from ..split import SplitGraph
from .oracle import edge_slots, graph_from_code

__all__ = [
    "SplitMix64",
    "random_split_graph",
    "random_graph",
    "enumerate_graphs",
    "ENUMERATION_CAP",
    "ENUMERATION_HARD_CAP",
]

MASK64 = (1 << 64) - 1
ENUMERATION_CAP = 7
ENUMERATION_HARD_CAP = 8


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def bernoulli(self, p: Fraction) -> bool:
        u = self.next() >> 11
        return u * p.denominator < p.numerator << 53


def _probability(p) -> Fraction:
    if isinstance(p, float):
        raise TypeError("edge probability must be an exact rational")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    return p


def random_split_graph(k: int, s: int, edge_probability, seed: int) -> SplitGraph:
    """Split graph with ``K = 0..k-1`` complete and ``S = k..k+s-1`` independent.

    The ``k*s`` cross pairs are drawn row by row (``(0,k), (0,k+1), ...``),
    each present with the given probability.
    """
    if k < 1 or s < 0:
        raise ValueError("need k >= 1 and s >= 0")
    p = _probability(edge_probability)
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, j) for i in range(k) for j in range(k, k + s) if rng.bernoulli(p)]
    return SplitGraph.with_clique(Graph(k + s, edges), range(k))


def random_graph(n: int, edge_probability, seed: int) -> Graph:
    """Erdos-Renyi graph; pairs drawn in graph6 slot order."""
    p = _probability(edge_probability)
    rng = SplitMix64(seed)
    return Graph(n, [pair for pair in edge_slots(n) if rng.bernoulli(p)])


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices once, in code order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ENUMERATION_HARD_CAP:
        raise ValueError(f"enumeration beyond n={ENUMERATION_HARD_CAP} is not supported")
    if n > ENUMERATION_CAP and not allow_large:
        raise ValueError(f"n={n} exceeds the default cap {ENUMERATION_CAP}; pass allow_large")
    for code in range(1 << len(edge_slots(n))):
        yield graph_from_code(n, code)
