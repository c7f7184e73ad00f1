"""Brute-force oracles that use no split structure at all.

Labeled graphs on ``n`` vertices are indexed by an integer *code*: bit ``t``
of the code is the ``t``-th edge slot in graph6 order (column-major upper
triangle, ``(0,1), (0,2), (1,2), (0,3), ...``).  The vectorised tables below
evaluate every clique/independent bipartition of every code in a block at
once, which is what makes the exhaustive census affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..graphs import Graph, adjacency_matrix, mask_of
from ..linalg import SubspaceBasis, nullspace_basis, rank
from ..split import SPartition

__all__ = [
    "edge_slots",
    "graph_from_code",
    "code_of",
    "graph6_from_code",
    "brute_nullspace",
    "brute_nullity",
    "brute_s_partitions",
    "brute_is_split",
    "brute_maximum_cliques",
    "brute_maximum_independent_sets",
    "OracleBlock",
    "oracle_block",
    "subset_bitset",
]


@lru_cache(maxsize=None)
def edge_slots(n: int) -> tuple:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_from_code(n: int, code: int) -> Graph:
    slots = edge_slots(n)
    adj = [0] * n
    while code:
        low = code & -code
        code ^= low
        i, j = slots[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph._wrap(tuple(adj))


def code_of(g: Graph) -> int:
    return sum(1 << t for t, (i, j) in enumerate(edge_slots(g.n)) if g.adj[i] >> j & 1)


def graph6_from_code(n: int, code: int) -> str:
    """graph6 text written straight from the slot bits (n < 63)."""
    if not 0 <= n < 63:
        raise ValueError("code encoder handles 0 <= n < 63 only")
    length = n * (n - 1) // 2
    chars = [chr(63 + n)]
    for start in range(0, length, 6):
        value = 0
        for q in range(6):
            t = start + q
            value = value << 1 | (t < length and code >> t & 1)
        chars.append(chr(63 + value))
    return "".join(chars)


def brute_nullspace(g: Graph) -> SubspaceBasis:
    """Kernel of the adjacency matrix in natural vertex order, by plain RREF."""
    return nullspace_basis(adjacency_matrix(g))


def brute_nullity(g: Graph) -> int:
    return g.n - rank(adjacency_matrix(g))


def _subset_tables(g: Graph) -> tuple[list[bool], list[bool]]:
    size = 1 << g.n
    clique = [True] * size
    indep = [True] * size
    adj = g.adj
    for m in range(1, size):
        low = m & -m
        rest = m ^ low
        nb = adj[low.bit_length() - 1]
        clique[m] = clique[rest] and nb & rest == rest
        indep[m] = indep[rest] and not nb & rest
    return clique, indep


def brute_s_partitions(g: Graph) -> list[SPartition]:
    """Every (clique, independent) bipartition, by checking all ``2^n`` subsets."""
    clique, indep = _subset_tables(g)
    full = (1 << g.n) - 1
    vs = frozenset(range(g.n))
    out = []
    for m in range(full + 1):
        if clique[m] and indep[full ^ m]:
            K = frozenset(v for v in range(g.n) if m >> v & 1)
            out.append(SPartition(K, vs - K))
    return sorted(out, key=SPartition.sort_key)


def brute_is_split(g: Graph) -> bool:
    return bool(brute_s_partitions(g))


def _maximum(table: list[bool], n: int) -> list[frozenset]:
    best = max(bin(m).count("1") for m, ok in enumerate(table) if ok)
    return sorted(
        (frozenset(v for v in range(n) if m >> v & 1)
         for m, ok in enumerate(table) if ok and bin(m).count("1") == best),
        key=sorted,
    )


def brute_maximum_cliques(g: Graph) -> list[frozenset]:
    return _maximum(_subset_tables(g)[0], g.n)


def brute_maximum_independent_sets(g: Graph) -> list[frozenset]:
    return _maximum(_subset_tables(g)[1], g.n)


# -- vectorised tables over blocks of codes ---------------------------------


@lru_cache(maxsize=None)
def _subset_edge_masks(n: int) -> np.ndarray:
    """``E[m]`` = code bits of the edge slots inside vertex subset ``m``."""
    out = np.zeros(1 << n, dtype=np.uint64)
    for t, (i, j) in enumerate(edge_slots(n)):
        pair = (1 << i) | (1 << j)
        members = np.arange(1 << n)
        out[(members & pair) == pair] |= np.uint64(1 << t)
    return out


def _bitsets(table: np.ndarray) -> list[int]:
    packed = np.packbits(table, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


@dataclass
class OracleBlock:
    """Oracle answers for a block of consecutive codes.

    Bitsets are indexed by vertex-subset masks: bit ``m`` of
    ``partitions[c]`` is set iff ``(m, complement of m)`` is an s-partition.
    Clique and independence data are only filled in for split codes.
    """

    n: int
    start: int
    split: np.ndarray
    complement_split: np.ndarray
    partitions: dict
    max_cliques: dict
    max_independent: dict
    omega: dict
    alpha: dict


def oracle_block(n: int, start: int, stop: int) -> OracleBlock:
    E = _subset_edge_masks(n)
    full_code = np.uint64((1 << len(edge_slots(n))) - 1)
    codes = np.arange(start, stop, dtype=np.uint64)[:, None]
    inside = codes & E[None, :]
    clique = inside == E[None, :]
    indep = inside == 0
    # indep of the complement subset: column m of the result is indep[:, ~m]
    valid = clique & indep[:, ::-1]
    split = valid.any(axis=1)

    comp = codes ^ full_code
    cinside = comp & E[None, :]
    cvalid = (cinside == E[None, :]) & (cinside == 0)[:, ::-1]
    complement_split = cvalid.any(axis=1)

    idx = np.nonzero(split)[0]
    pop = np.array([bin(m).count("1") for m in range(1 << n)])
    partitions = max_cliques = max_independent = omega = alpha = {}
    if len(idx):
        cl = clique[idx]
        ind = indep[idx]
        om = (cl * pop[None, :]).max(axis=1)
        al = (ind * pop[None, :]).max(axis=1)
        keys = [start + int(i) for i in idx]
        partitions = dict(zip(keys, _bitsets(valid[idx])))
        max_cliques = dict(zip(keys, _bitsets(cl & (pop[None, :] == om[:, None]))))
        max_independent = dict(zip(keys, _bitsets(ind & (pop[None, :] == al[:, None]))))
        omega = dict(zip(keys, om.tolist()))
        alpha = dict(zip(keys, al.tolist()))
    return OracleBlock(n, start, split, complement_split, partitions, max_cliques,
                       max_independent, omega, alpha)


def subset_bitset(sets) -> int:
    """Bitset over subset masks, matching :class:`OracleBlock` fields."""
    return sum(1 << mask_of(s) for s in sets)
