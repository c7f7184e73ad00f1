"""Kernel structure of split graphs.

Everything here works from the block form ``A = [[J - I, R], [R^t, 0]]``
under the vertex order ``(K, S)``.  The clique-kernel
``nul(R^t) ∩ im((I - J)^{-1} R)`` decides whether clique vertices can carry
kernel weight; it is at most one-dimensional, and the nullity is
``nul(R) + dim(clique-kernel)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, TheoremViolation
from .graphs import (
    Graph,
    VertexSet,
    adjacency_matrix,
    are_twins,
    delete_vertex,
    is_connected,
    is_threshold,
    isolated_vertices,
)
from .linalg import (
    QMatrix,
    QVector,
    Rational,
    SubspaceBasis,
    _det_int,
    _eliminate,
    _int_rows,
    adjugate,
    column_space_basis,
    det_bareiss,
    image_contains,
    integer_normalize,
    nullspace_basis,
    rank,
    solve_particular,
    subspace_intersect,
)
from .split import (
    SplitGraph,
    SwingReport,
    balance_class,
    maximum_independent_sets,
    swing_report,
)

__all__ = [
    "CliqueKernel",
    "NullityReport",
    "KernelBasis",
    "NullityOneReport",
    "Implication",
    "SupportPredicates",
    "inverse_i_minus_j",
    "clique_kernel_basis",
    "clique_kernel",
    "nullity",
    "support",
    "structured_kernel_basis",
    "nullity_one_report",
    "image_basis_by_deletion",
    "deletion_image_bases",
    "support_location_predicates",
]


@dataclass(frozen=True)
class CliqueKernel:
    dimension: int
    generator: Optional[QVector] = None

    def __post_init__(self):
        if self.dimension not in (0, 1):
            raise TheoremViolation(f"clique-kernel has dimension {self.dimension}")
        if (self.generator is None) != (self.dimension == 0):
            raise ValueError("generator must be present exactly when dimension is 1")


@dataclass(frozen=True)
class NullityReport:
    nullity: int
    nul_R: int
    clique_kernel: Optional[CliqueKernel]
    support: VertexSet
    support_meets_clique: bool

    def as_dict(self) -> dict:
        ck = self.clique_kernel
        return {
            "nullity": self.nullity,
            "nul_R": self.nul_R,
            "cliqueker_dim": None if ck is None else ck.dimension,
            "generator": None if ck is None or ck.generator is None else [str(x) for x in ck.generator],
            "support": sorted(self.support),
            "support_meets_clique": self.support_meets_clique,
        }


@dataclass(frozen=True)
class KernelBasis:
    """Kernel basis in ``(K, S)`` coordinates, tagged by where each vector comes from.

    ``structure[i]`` is ``("clique_supported", None)`` for the vector
    ``(z, y0, 0)`` or ``("independent", v)`` for ``(0, -y_v, e_v)``.
    ``pivot_vertices`` are the independent vertices whose columns of ``R``
    were kept as the column basis ``P``; ``free_vertices`` are the rest.
    """

    vectors: SubspaceBasis
    structure: tuple
    order: tuple
    pivot_vertices: tuple
    free_vertices: tuple
    z: Optional[QVector]
    y0: Optional[QVector]
    rank_R: int
    rank: int
    clique_kernel: Optional[CliqueKernel] = None

    @property
    def nullity(self) -> int:
        return self.vectors.dim

    def by_vertex(self, i: int) -> dict:
        """The ``i``-th basis vector as a ``{vertex: value}`` mapping."""
        return dict(zip(self.order, self.vectors.vectors[i]))


@dataclass(frozen=True)
class NullityOneReport:
    adjugate_rank: int
    support_from_adjugate: VertexSet
    vertex_deleted_dets: dict
    anchor: int
    kernel_vector: QVector
    adjugate: Optional[QMatrix] = None


def inverse_i_minus_j(k: int) -> QMatrix:
    """``(I - J)^{-1} = I - J/(k-1)`` for ``k >= 2``."""
    if k < 2:
        raise DomainError("I - J is singular for |K| < 2")
    c = Fraction(-1, k - 1)
    return QMatrix._wrap(
        tuple(tuple(1 + c if i == j else c for j in range(k)) for i in range(k)), k, k
    )


def _require_clique(sp: SplitGraph) -> None:
    if sp.k < 2:
        raise DomainError("clique-kernel is defined only for |K| >= 2")


def clique_kernel_basis(sp: SplitGraph) -> SubspaceBasis:
    """Raw basis of ``nul(R^t) ∩ im((I-J)^{-1} R)``, with no dimension check."""
    _require_clique(sp)
    left = nullspace_basis(sp.R.T)
    if not left.vectors:
        return left
    right = column_space_basis(_scaled_inverse_times_R(sp))
    return subspace_intersect(left, right)


def _scaled_inverse_times_R(sp: SplitGraph) -> QMatrix:
    # (k-1)(I - J)^{-1} R = (k-1) R - 1 r^t: same column space, integer entries.
    k = sp.k
    rows = sp.R._data
    r = [sum(col) for col in zip(*rows)] if rows else []
    return QMatrix._wrap(
        tuple(tuple((k - 1) * x - rj for x, rj in zip(row, r)) for row in rows), k, sp.s
    )


def clique_kernel(sp: SplitGraph) -> CliqueKernel:
    b = clique_kernel_basis(sp)
    if b.dim == 0:
        return CliqueKernel(0)
    return CliqueKernel(b.dim, integer_normalize(b.vectors[0]))


def _pivot_columns(R: QMatrix) -> list[int]:
    # Leftmost independent columns; forward elimination picks them greedily.
    rows, _ = _int_rows(R._data)
    return _eliminate(rows, R.cols, reduce=False)


def structured_kernel_basis(sp: SplitGraph) -> KernelBasis:
    """Kernel basis ``{(z, y0, 0)} ∪ {(0, -y_v, e_v) : v free}``.

    ``P`` is the set of leftmost independent columns of ``R``; ``y0`` solves
    ``(I - J) z = P y0`` and ``y_v`` solves ``P y_v = R[:, v]``.  Coordinates
    follow ``sp.order``.  For ``|K| == 1`` the matrix ``I - J`` vanishes, so
    the clique coordinate is free exactly when ``R`` is zero.
    """
    R = sp.R
    k, s = sp.k, sp.s
    n = k + s
    piv = _pivot_columns(R)
    piv_set = set(piv)
    free = [j for j in range(s) if j not in piv_set]
    P = R.submatrix(range(k), piv)

    vectors: list[QVector] = []
    structure: list[tuple] = []
    z = y0 = ck = None
    if k >= 2:
        ck = clique_kernel(sp)
        if ck.dimension == 1:
            z = ck.generator
            total = sum(z)
            rhs = tuple(zi - total for zi in z)
            y0 = solve_particular(P, rhs)
            if y0 is None:
                raise TheoremViolation("(I - J) z is not in the column space of P")
    elif k == 1 and not any(R.row(0)):
        z, y0 = (1,), (0,) * len(piv)
    if z is not None:
        x = list(z) + [0] * s
        for j, val in zip(piv, y0):
            x[k + j] = val
        vectors.append(tuple(x))
        structure.append(("clique_supported", None))
    for j in free:
        yv = solve_particular(P, R.col(j))
        if yv is None:
            raise TheoremViolation("dependent column is not in the span of P")
        x = [0] * n
        x[k + j] = 1
        for jj, val in zip(piv, yv):
            x[k + jj] = -val
        vectors.append(tuple(x))
        structure.append(("independent", sp.S[j]))
    return KernelBasis(
        vectors=SubspaceBasis._trusted(n, vectors),
        structure=tuple(structure),
        order=sp.order,
        pivot_vertices=tuple(sp.S[j] for j in piv),
        free_vertices=tuple(sp.S[j] for j in free),
        z=z,
        y0=y0,
        rank_R=len(piv),
        rank=n - len(vectors),
        clique_kernel=ck,
    )


def _support_of(order, vectors) -> VertexSet:
    return frozenset(v for i, v in enumerate(order) if any(x[i] != 0 for x in vectors))


def support(sp: SplitGraph) -> VertexSet:
    """Vertices where some kernel vector is nonzero."""
    kb = structured_kernel_basis(sp)
    return _support_of(kb.order, kb.vectors.vectors)


def nullity(sp: SplitGraph) -> NullityReport:
    """Nullity as ``nul(R) + dim(clique-kernel)``.

    With ``|K| < 2`` the clique-kernel is undefined and the nullity is read
    from a direct elimination of the adjacency matrix instead.
    """
    kb = structured_kernel_basis(sp)
    nul_R = sp.s - kb.rank_R
    supp = _support_of(kb.order, kb.vectors.vectors)
    if sp.k >= 2:
        ck = kb.clique_kernel
        nul = nul_R + ck.dimension
    else:
        ck = None
        nul = sp.n - rank(sp.adjacency())
    return NullityReport(nul, nul_R, ck, supp, bool(supp & frozenset(sp.K)))


def nullity_one_report(g: Graph) -> NullityOneReport:
    """Adjugate structure of a nullity-one graph.

    Checks that every column of ``adj(A)`` lies in the kernel, that
    ``adj(A)_vv = det(G - v)``, and that with ``x`` the adjugate column of the
    first supported vertex ``u``, ``x_v^2 = det(G - v) det(G - u)``.  The last
    identity is also checked, scale-free, against an independently computed
    kernel vector.
    """
    A = adjacency_matrix(g)
    n = g.n
    if n - rank(A) != 1:
        raise DomainError("nullity-one analysis requires nul(G) = 1")
    adj = adjugate(A)
    adj_rank = rank(adj)
    dets = {v: _det_int([list(r) for r in adjacency_matrix(delete_vertex(g, v))._data]) for v in range(n)}
    if any(adj[v, v] != dets[v] for v in range(n)):
        raise TheoremViolation("adjugate diagonal differs from vertex-deleted determinants")
    prod = A @ adj
    if any(prod[i, j] != 0 for i in range(n) for j in range(n)):
        raise TheoremViolation("an adjugate column is not in the kernel")
    supp = frozenset(v for v in range(n) if adj[v, v] != 0)
    if not supp:
        raise TheoremViolation("adjugate has zero diagonal")
    u = min(supp)
    x = adj.col(u)
    for v in range(n):
        expected = dets[v] * dets[u]
        if x[v] * x[v] != expected:
            raise TheoremViolation(f"x_v^2 != det(G-v) det(G-u) at v={v}")
    (kvec,) = nullspace_basis(A).vectors
    for v in range(n):
        if kvec[v] * kvec[v] * dets[u] != kvec[u] * kvec[u] * dets[v]:
            raise TheoremViolation(f"kernel vector violates x_v^2 identity at v={v}")
    return NullityOneReport(adj_rank, supp, dets, u, x, adj)


def deletion_image_bases(g: Graph) -> dict:
    """For each supported ``s``: whether the columns of ``A(G)`` other than ``s`` form a basis of ``im(G)``.

    Requires ``nul(G) = 1`` and no isolated vertices.
    """
    if isolated_vertices(g):
        raise DomainError("graph must have no isolated vertices")
    A = adjacency_matrix(g)
    r = rank(A)
    if g.n - r != 1:
        raise DomainError("column-deletion basis requires nul(G) = 1")
    (kvec,) = nullspace_basis(A).vectors
    out = {}
    for s in range(g.n):
        if kvec[s] != 0:
            cols = [j for j in range(g.n) if j != s]
            out[s] = rank(A.submatrix(range(g.n), cols)) == r == len(cols)
    return out


def image_basis_by_deletion(g: Graph, s: int) -> bool:
    """Whether the columns of ``A(G)`` other than ``s`` form a basis of ``im(G)``."""
    bases = deletion_image_bases(g)
    if s not in bases:
        raise DomainError(f"vertex {s} is not in the support")
    return bases[s]


@dataclass(frozen=True)
class Implication:
    name: str
    hypothesis: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.hypothesis or self.conclusion

    def as_dict(self) -> dict:
        return {"hypothesis": self.hypothesis, "conclusion": self.conclusion, "holds": self.holds}


@dataclass(frozen=True)
class SupportPredicates:
    support: VertexSet
    implications: tuple
    ones_not_in_image_yet_support_in_S: bool

    @property
    def all_hold(self) -> bool:
        return all(i.holds for i in self.implications)

    def __getitem__(self, name: str) -> Implication:
        for imp in self.implications:
            if imp.name == name:
                return imp
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "support": sorted(self.support),
            "implications": {i.name: i.as_dict() for i in self.implications},
            "ones_not_in_image_yet_support_in_S": self.ones_not_in_image_yet_support_in_S,
        }


def support_location_predicates(
    sp: SplitGraph,
    basis: KernelBasis | None = None,
    swing: SwingReport | None = None,
) -> SupportPredicates:
    """Evaluate every sufficient condition on where the support can sit.

    Each entry pairs a hypothesis computed from the graph with the conclusion
    it should force; ``holds`` is the material implication.  Conditions that
    need both sides of the partition nonempty are only triggered then.
    """
    g = sp.graph
    if basis is None:
        basis = structured_kernel_basis(sp)
    supp = _support_of(basis.order, basis.vectors.vectors)
    if swing is None:
        swing = swing_report(sp)
    R = sp.R
    K, S = frozenset(sp.K), frozenset(sp.S)
    both_sides = bool(K) and bool(S)
    connected = is_connected(g)
    deg = g.degrees()
    nul = basis.nullity
    in_S = supp <= S
    ones_in_im = image_contains(R, (1,) * sp.k)

    imps = [Implication("ones_in_image_R", ones_in_im, in_S)]

    equal_k = both_sides and connected and len({deg[v] for v in K}) == 1
    imps.append(Implication("equal_clique_degrees", equal_k, in_S))

    equal_s = both_sides and connected and len({deg[v] for v in S}) == 1
    kerR = nullspace_basis(R).vectors
    imps.append(Implication("equal_independent_degrees", equal_s, all(sum(x) == 0 for x in kerR)))

    nbhds = [g.adj[v] for v in sp.S]
    covered = 0
    disjoint = True
    for m in nbhds:
        if m == 0 or covered & m:
            disjoint = False
        covered |= m
    kmask = sum(1 << v for v in K)
    partition_cover = bool(S) and disjoint and covered == kmask
    imps.append(Implication("neighborhood_partition", partition_cover, nul == 0))

    imps.append(Implication("k_less_than_s", sp.k < sp.s, nul > 0))
    if sp.k == sp.s:
        imps.append(Implication("k_equals_s", True, (nul > 0) == (det_bareiss(R) == 0)))
    else:
        imps.append(Implication("k_equals_s", False, True))

    unbalanced = balance_class(sp) == "unbalanced"
    mis_core = frozenset(range(g.n)).intersection(*maximum_independent_sets(sp))
    imps.append(Implication("unbalanced_support", unbalanced, supp <= mis_core))
    imps.append(Implication("threshold_support", is_threshold(g), supp <= mis_core))

    W, Ss = swing.W, swing.S_star
    kind = swing.classification
    imps.append(Implication("swing_singleton", kind == "singleton", supp <= Ss | W))
    imps.append(
        Implication("swing_clique", kind == "clique", supp <= Ss and not (W & supp))
    )
    imps.append(
        Implication("swing_independent", kind == "independent_set", W <= supp <= Ss | W)
    )

    union_cover = both_sides and connected and covered == kmask and basis.rank_R == 1
    if union_cover:
        all_ones = all(x == 1 for row in R.tolist() for x in row)
        twins = all(are_twins(g, a, b) for a in S for b in S) and all(
            are_twins(g, a, b) for a in K for b in K
        )
        imps.append(Implication("rank_one_R", True, all_ones and twins))
    else:
        imps.append(Implication("rank_one_R", False, True))

    return SupportPredicates(supp, tuple(imps), (not ones_in_im) and in_S)
