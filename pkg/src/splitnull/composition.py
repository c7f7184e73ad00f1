"""Tyshkevich composition ``Sp ∘ G``.

The composite keeps the vertex ids of ``Sp`` and shifts those of ``G`` by
``|Sp|``.  Its edges are those of both factors plus every pair ``(x, y)`` with
``x`` in the clique side of ``Sp`` and ``y`` in ``G``.
"""

from __future__ import annotations

from .errors import DomainError, TheoremViolation
from .graphs import Graph, adjacency_matrix
from .linalg import QMatrix, SubspaceBasis, det_bareiss, nullspace_basis
from .split import SPartition, SplitGraph

__all__ = [
    "tyshkevich_compose",
    "compose_split",
    "composition_order",
    "embedded_kernel_vectors",
    "square_composition_nonsingularity",
]


def tyshkevich_compose(sp: SplitGraph, g: Graph) -> Graph:
    n = sp.n
    kmask = sum(1 << x for x in sp.K)
    gmask = ((1 << g.n) - 1) << n
    masks = [m | gmask if (kmask >> v & 1) else m for v, m in enumerate(sp.graph.adj)]
    masks += [(m << n) | kmask for m in g.adj]
    return Graph._wrap(tuple(masks))


def compose_split(sp: SplitGraph, other: SplitGraph) -> SplitGraph:
    """Composite of two split graphs, with s-partition ``(K ∪ K', S ∪ S')``."""
    h = tyshkevich_compose(sp, other.graph)
    shift = sp.n
    return SplitGraph(
        h,
        SPartition(
            sp.partition.clique | {v + shift for v in other.K},
            sp.partition.independent | {v + shift for v in other.S},
        ),
    )


def composition_order(sp: SplitGraph, g: Graph) -> tuple:
    """Composite vertex ids in the block order ``(K, S, V(G))``."""
    return sp.K + sp.S + tuple(range(sp.n, sp.n + g.n))


def embedded_kernel_vectors(sp: SplitGraph, g: Graph) -> SubspaceBasis:
    """The vectors ``(0, z, 0)``, ``z`` in a basis of ``nul(R)``, in ``(K, S, V(G))`` order.

    Each one is checked against the composite adjacency matrix.
    """
    k, s = sp.k, sp.s
    total = sp.n + g.n
    vecs = [(0,) * k + z + (0,) * g.n for z in nullspace_basis(sp.R).vectors]
    if vecs:
        A = adjacency_matrix(tyshkevich_compose(sp, g), composition_order(sp, g))
        for v in vecs:
            if any(A @ v):
                raise TheoremViolation("embedded vector is not annihilated by the composite")
    return SubspaceBasis._trusted(total, vecs)


def square_composition_nonsingularity(
    sp: SplitGraph, other: SplitGraph
) -> tuple[bool, bool, bool]:
    """Nonsingularity of ``(Sp ∘ Sp', Sp, Sp')`` for factors with ``|K| = |S|``.

    The composite's biadjacency matrix is block upper-triangular,
    ``[[R, J], [0, R']]``, and its determinant is checked to factor.
    """
    if sp.k != sp.s or other.k != other.s:
        raise DomainError("both factors need |K| = |S|")
    h = compose_split(sp, other)
    composite = det_bareiss(h.adjacency()) != 0
    left = det_bareiss(sp.adjacency()) != 0
    right = det_bareiss(other.adjacency()) != 0

    k1, k2 = sp.k, other.k
    top = sp.R.hstack(QMatrix.ones(k1, k2))
    bottom = QMatrix.zeros(k2, k1).hstack(other.R)
    P = top.vstack(bottom)
    if P != h.R:
        raise TheoremViolation("composite biadjacency is not [[R, J], [0, R']]")
    if det_bareiss(P) != det_bareiss(sp.R) * det_bareiss(other.R):
        raise TheoremViolation("det of block-triangular biadjacency does not factor")
    if composite != (left and right):
        raise TheoremViolation("composite nonsingularity differs from both factors")
    return composite, left, right
