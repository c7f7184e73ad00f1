"""The fixed theorem catalogue and the per-object checks behind it.

Each entry has a stable id, the family of objects it is checked on, and a
check function.  A check returns ``True`` (holds), ``False`` (violated) or
``None`` (hypothesis not met, or the oracle it needs is unavailable at this
size).  Exceptions raised inside a check count as violations: failures are
data, never crashes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Callable, Optional

from ..composition import (
    compose_split,
    composition_order,
    embedded_kernel_vectors,
    square_composition_nonsingularity,
    tyshkevich_compose,
)
from ..determinant import det_split_lemma, det_split_schur, singularity_criterion
from ..graphs import (
    Graph,
    adjacency_matrix,
    are_twins,
    complement,
    induced_subgraph,
    is_clique,
    is_independent,
    isolated_vertices,
    mask_of,
    parse_graph6,
    twin_classes,
    write_graph6,
)
from ..linalg import (
    QMatrix,
    SubspaceBasis,
    det_bareiss,
    image_contains,
    image_contains_by_cokernel,
    nullspace_basis,
    rank,
    solve_particular,
)
from ..nullspace import (
    clique_kernel,
    clique_kernel_basis,
    deletion_image_bases,
    inverse_i_minus_j,
    nullity,
    nullity_one_report,
    structured_kernel_basis,
    support_location_predicates,
)
from ..split import (
    SplitGraph,
    all_s_partitions,
    balance_class,
    clique_and_independence_numbers,
    closed_form_partitions,
    maximum_cliques,
    maximum_independent_sets,
    recognize_split,
    swing_report,
)
from .generators import SplitMix64
from .oracle import (
    _subset_tables,
    brute_nullspace,
    graph6_from_code,
    subset_bitset,
)

__all__ = ["Theorem", "CATALOG", "THEOREM_IDS", "GraphCase", "SplitCase", "ComposeCase", "run_family"]


@dataclass(frozen=True)
class Theorem:
    id: str
    family: str
    statement: str
    check: Callable


CATALOG: list[Theorem] = []


def theorem(tid: str, family: str, statement: str):
    def register(fn):
        CATALOG.append(Theorem(tid, family, statement, fn))
        return fn

    return register


def run_family(family: str, case, record) -> None:
    """Run every check of ``family`` on ``case``; ``record(tid, outcome)`` gets the result."""
    for th in _BY_FAMILY[family]:
        try:
            outcome = th.check(case)
        except Exception:  # noqa: BLE001 - a crash inside a check is a counterexample
            outcome = False
        record(th.id, outcome)


def _span_equal(vectors, basis_vectors, dim: int) -> bool:
    """Whether two lists of vectors (the second one independent) span the same space."""
    if len(vectors) != len(basis_vectors):
        return False
    if not vectors:
        return True
    stacked = QMatrix._wrap(tuple(vectors) + tuple(basis_vectors), 2 * len(vectors), dim)
    return rank(stacked) == len(vectors) == rank(QMatrix._wrap(tuple(vectors), len(vectors), dim))


def _support(vectors, n: int) -> frozenset:
    return frozenset(v for v in range(n) if any(x[v] != 0 for x in vectors))


# -- every labeled graph ---------------------------------------------------


class GraphCase:
    """A graph plus whatever the block oracle knows about it."""

    def __init__(self, g: Graph, code: Optional[int] = None, split: Optional[bool] = None,
                 complement_split: Optional[bool] = None, partitions: Optional[int] = None):
        self.g = g
        self.code = code
        self.oracle_split = split
        self.oracle_complement_split = complement_split
        self.oracle_partitions = partitions

    @cached_property
    def A(self) -> QMatrix:
        return adjacency_matrix(self.g)

    @cached_property
    def kernel(self) -> SubspaceBasis:
        return brute_nullspace(self.g)

    @cached_property
    def nullity(self) -> int:
        return self.kernel.dim

    @cached_property
    def support(self) -> frozenset:
        return _support(self.kernel.vectors, self.g.n)

    @cached_property
    def recognized(self) -> Optional[SplitGraph]:
        return recognize_split(self.g)

    @cached_property
    def nullity_one(self):
        return nullity_one_report(self.g)

    @cached_property
    def deleted_dets(self) -> dict:
        return self.nullity_one.vertex_deleted_dets


@theorem("graph6-roundtrip", "graph", "graph6 writing and parsing are mutually inverse, bit for bit")
def _graph6(c: GraphCase):
    text = write_graph6(c.g)
    if c.code is not None and text != graph6_from_code(c.g.n, c.code):
        return False
    return parse_graph6(text) == c.g and write_graph6(parse_graph6(text)) == text


@theorem("adjacency-symmetric", "graph", "adjacency matrices are symmetric 0/1 with zero diagonal")
def _adjacency(c: GraphCase):
    n = c.g.n
    A = c.A
    return all(A[i, j] == A[j, i] == c.g.has_edge(i, j) for i in range(n) for j in range(n) if i != j) and not any(
        A[i, i] for i in range(n)
    )


@theorem("split-recognition", "graph", "degree-sequence recognition agrees with brute-force bipartition")
def _recognition(c: GraphCase):
    sp = c.recognized
    if c.oracle_split is None:
        return None
    if (sp is not None) != c.oracle_split:
        return False
    if sp is None:
        return True
    return sp.partition.is_valid_for(c.g) and c.oracle_partitions >> mask_of(sp.K) & 1 == 1


@theorem("complement-split", "graph", "the complement of a split graph is split")
def _complement(c: GraphCase):
    if not c.recognized:
        return None
    comp = recognize_split(complement(c.g))
    if c.oracle_complement_split is not None and not c.oracle_complement_split:
        return False
    return comp is not None


@theorem("twin-classes", "graph", "twin classes partition V, match the pairwise relation, and are cliques or independent sets")
def _twins(c: GraphCase):
    g = c.g
    classes = twin_classes(g)
    where = {}
    for i, cls in enumerate(classes):
        for v in cls:
            if v in where:
                return False
            where[v] = i
    if len(where) != g.n:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if are_twins(g, u, v) != (where[u] == where[v]):
                return False
    return all(is_clique(g, cls) or is_independent(g, cls) for cls in classes)


@theorem("oracle-nullspace", "graph", "the brute-force kernel basis is annihilated by A and has n - rank(A) vectors")
def _oracle(c: GraphCase):
    A = c.A
    if any(any(A @ x) for x in c.kernel.vectors):
        return False
    if c.nullity != c.g.n - rank(A):
        return False
    return (c.nullity == 0) == (det_bareiss(A) != 0)


# -- nullity-one graphs (split or not) --------------------------------------


@theorem("adjugate-rank-one", "nullity_one", "nul(G) = 1 forces rank(adj A) = 1 with every column in the kernel")
def _adj_rank(c: GraphCase):
    rep = c.nullity_one
    return rep.adjugate_rank == 1 and c.kernel.contains(rep.kernel_vector)


@theorem("adjugate-diagonal", "nullity_one", "adj(A)_vv = det(G - v), so G - v is singular iff adj(A)_vv = 0")
def _adj_diag(c: GraphCase):
    rep = c.nullity_one
    adj = rep.adjugate
    n = c.g.n
    if set(rep.vertex_deleted_dets) != set(range(n)):
        return False
    return all(adj[v, v] == rep.vertex_deleted_dets[v] for v in range(n))


@theorem("adjugate-support", "nullity_one", "Supp(G) = {v : G - v nonsingular} and adj_uv != 0 iff u, v in Supp(G)")
def _adj_support(c: GraphCase):
    rep = c.nullity_one
    dets = rep.vertex_deleted_dets
    supp = c.support
    if supp != frozenset(v for v, d in dets.items() if d != 0) or rep.support_from_adjugate != supp:
        return False
    adj = rep.adjugate
    n = c.g.n
    return all((adj[v, w] != 0) == (v in supp and w in supp) for v in range(n) for w in range(n))


@theorem("kernel-square-identity", "nullity_one", "x_v^2 = det(G - v) det(G - u) for the adjugate-normalised kernel vector")
def _kernel_square(c: GraphCase):
    rep = c.nullity_one
    dets = rep.vertex_deleted_dets
    u = rep.anchor
    x = rep.kernel_vector
    if any(x[v] * x[v] != dets[v] * dets[u] for v in range(c.g.n)):
        return False
    (y,) = c.kernel.vectors
    return all(y[v] * y[v] * dets[u] == y[u] * y[u] * dets[v] for v in range(c.g.n))


@theorem("deletion-image-basis", "nullity_one", "without isolated vertices, dropping any supported column leaves a basis of im(G)")
def _deletion(c: GraphCase):
    if isolated_vertices(c.g):
        return None
    bases = deletion_image_bases(c.g)
    return set(bases) == c.support and all(bases.values())


# -- split graphs, one s-partition at a time --------------------------------


class SplitCase:
    """A split graph under one s-partition, with oracle data for its graph.

    ``brute`` (optional) holds exhaustive answers: s-partition, maximum clique
    and maximum independent set bitsets and ``(omega, alpha)``.  ``primary``
    marks the one partition per graph on which partition-free facts are
    checked.
    """

    def __init__(self, sp: SplitGraph, graph_case: GraphCase, brute: Optional[dict] = None,
                 primary: bool = True, seed: int = 0):
        self.sp = sp
        self.gc = graph_case
        self.brute = brute
        self.primary = primary
        self.seed = seed

    @property
    def g(self) -> Graph:
        return self.sp.graph

    @cached_property
    def A(self) -> QMatrix:
        return self.sp.adjacency()

    @cached_property
    def kernel_ks(self) -> tuple:
        order = self.sp.order
        return tuple(tuple(x[v] for v in order) for x in self.gc.kernel.vectors)

    @property
    def nul(self) -> int:
        return self.gc.nullity

    @property
    def support(self) -> frozenset:
        return self.gc.support

    @cached_property
    def rank_R(self) -> int:
        return rank(self.sp.R)

    @cached_property
    def nul_R(self) -> int:
        return self.sp.s - self.rank_R

    @cached_property
    def ck_raw(self) -> SubspaceBasis:
        return clique_kernel_basis(self.sp)

    @cached_property
    def basis(self):
        return structured_kernel_basis(self.sp)

    @cached_property
    def report(self):
        return nullity(self.sp)

    @cached_property
    def swing(self):
        return swing_report(self.sp)

    @cached_property
    def predicates(self):
        return support_location_predicates(self.sp, self.basis, self.swing)

    @cached_property
    def K(self) -> frozenset:
        return frozenset(self.sp.K)

    @cached_property
    def S(self) -> frozenset:
        return frozenset(self.sp.S)

    @cached_property
    def brute_tables(self):
        if self.brute is not None:
            return self.brute
        if self.g.n > 12:
            return None
        clique, indep = _subset_tables(self.g)
        full = (1 << self.g.n) - 1
        pop = [bin(m).count("1") for m in range(full + 1)]
        om = max(p for p, ok in zip(pop, clique) if ok)
        al = max(p for p, ok in zip(pop, indep) if ok)
        self.brute = {
            "partitions": sum(1 << m for m in range(full + 1) if clique[m] and indep[full ^ m]),
            "max_cliques": sum(1 << m for m in range(full + 1) if clique[m] and pop[m] == om),
            "max_independent": sum(1 << m for m in range(full + 1) if indep[m] and pop[m] == al),
            "omega": om,
            "alpha": al,
        }
        return self.brute

    def implication(self, name: str):
        imp = self.predicates[name]
        if self.predicates.support != self.support:
            return False
        return imp.holds if imp.hypothesis else None


def _require_clique(c: SplitCase) -> bool:
    return c.sp.k >= 2


@theorem("nullity-formula", "split", "nul(Sp) = nul(R) + dim(clique-kernel) for |K| >= 2")
def _formula(c: SplitCase):
    rep = c.report
    if not _require_clique(c):
        return None if rep.nullity == c.nul else False
    return rep.nullity == c.nul == c.nul_R + c.ck_raw.dim and rep.nul_R == c.nul_R


@theorem("clique-kernel-dimension", "split", "dim(clique-kernel) <= 1 for |K| >= 2")
def _ck_dim(c: SplitCase):
    if not _require_clique(c):
        return None
    return c.ck_raw.dim <= 1


@theorem("clique-kernel-generator", "split", "the normalised generator z is integral, primitive, sign-fixed, in nul(R^t) and in im((I-J)^{-1} R)")
def _ck_gen(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim != 1:
        return None
    z = clique_kernel(c.sp).generator
    if not all(type(x) is int for x in z) or gcd(*z) != 1:
        return False
    if next(x for x in z if x) <= 0:
        return False
    R = c.sp.R
    if any(R.T @ z):
        return False
    return image_contains(inverse_i_minus_j(c.sp.k) @ R, z) and c.ck_raw.contains(z)


@theorem("kernel-block-equations", "split", "(x_K, x_S) in nul(Sp) iff (I-J) x_K = R x_S and R^t x_K = 0")
def _block(c: SplitCase):
    sp = c.sp
    k, s = sp.k, sp.s
    R = sp.R
    IJ = QMatrix.identity(k) - QMatrix.ones(k, k)
    for x in c.kernel_ks:
        xk, xs = x[:k], x[k:]
        if IJ @ xk != R @ xs or any(R.T @ xk):
            return False
    system = IJ.hstack(-R).vstack(R.T.hstack(QMatrix.zeros(s, s)))
    sol = nullspace_basis(system).vectors
    return _span_equal(list(sol), list(c.kernel_ks), k + s)


@theorem("kernel-contains-ker-R", "split", "(0, z) is a kernel vector for z in nul(R); equality iff Supp(Sp) in S")
def _ker_r(c: SplitCase):
    k = c.sp.k
    vecs = [(0,) * k + z for z in nullspace_basis(c.sp.R).vectors]
    if any(any(c.A @ v) for v in vecs):
        return False
    equal = len(vecs) == c.nul
    return equal == (c.support <= c.S)


@theorem("nullity-lower-bound", "split", "nul(Sp) >= nul(R) = |S| - rank(R), with equality iff Supp(Sp) in S")
def _lower(c: SplitCase):
    return c.nul >= c.nul_R and (c.nul == c.nul_R) == (c.support <= c.S)


@theorem("zero-sum-clique-part", "split", "a kernel vector whose clique part sums to zero has zero clique part")
def _zero_sum(c: SplitCase):
    if not c.nul:
        return None
    k = c.sp.k
    parts = [x[:k] for x in c.kernel_ks]
    sums = QMatrix._wrap((tuple(sum(p) for p in parts),), 1, len(parts))
    for coeffs in nullspace_basis(sums).vectors:
        combo = [sum(a * p[i] for a, p in zip(coeffs, parts)) for i in range(k)]
        if any(combo):
            return False
    return True


@theorem("image-criterion", "split", "v in im(R) iff nul(R^t) is orthogonal to v (checked for the all-ones vector and the columns)")
def _image(c: SplitCase):
    R = c.sp.R
    probes = [(1,) * c.sp.k] + [R.col(j) for j in range(c.sp.s)]
    return all(image_contains(R, v) == image_contains_by_cokernel(R, v) for v in probes)


@theorem("ones-in-image-support", "split", "1 in im(R) implies Supp(Sp) in S")
def _ones(c: SplitCase):
    return c.implication("ones_in_image_R")


@theorem("clique-part-in-clique-kernel", "split", "the clique part of every kernel vector lies in the clique-kernel")
def _in_ck(c: SplitCase):
    if not _require_clique(c):
        return None
    k = c.sp.k
    return all(c.ck_raw.contains(x[:k]) for x in c.kernel_ks)


@theorem("clique-kernel-extends", "split", "every clique-kernel vector z extends to a kernel vector (z, y)")
def _extends(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim == 0:
        return None
    sp = c.sp
    k = sp.k
    for z in c.ck_raw.vectors:
        rhs = tuple(zi - sum(z) for zi in z)
        y = solve_particular(sp.R, rhs)
        if y is None or any(c.A @ (tuple(z) + y)):
            return False
    return True


@theorem("support-in-S-iff-clique-kernel-zero", "split", "Supp(Sp) in S iff the clique-kernel is zero (|K| >= 2)")
def _supp_ck(c: SplitCase):
    if not _require_clique(c):
        return None
    return (c.support <= c.S) == (c.ck_raw.dim == 0)


@theorem("singular-support-meets-S", "split", "a singular split graph with |K| >= 2 has a supported independent vertex")
def _meets_s(c: SplitCase):
    if not _require_clique(c) or not c.nul:
        return None
    return bool(c.support & c.S)


@theorem("support-matches-oracle", "split", "library support and nullity agree with the brute-force kernel")
def _supp_oracle(c: SplitCase):
    return (c.report.support == c.support == c.predicates.support
            and c.basis.nullity == c.nul)


@theorem("singular-if-k-less-than-s", "split", "|K| < |S| implies Sp singular")
def _k_lt_s(c: SplitCase):
    if c.sp.k >= c.sp.s:
        return None
    return c.nul > 0 and c.predicates["k_less_than_s"].holds


@theorem("square-singular-iff-R-singular", "split", "|K| = |S| implies (Sp singular iff R singular)")
def _k_eq_s(c: SplitCase):
    if c.sp.k != c.sp.s:
        return None
    return (c.nul > 0) == (det_bareiss(c.sp.R) == 0) and c.predicates["k_equals_s"].holds


@theorem("equal-clique-degrees-support", "split", "connected, all clique degrees equal implies Supp(Sp) in S")
def _eq_k(c: SplitCase):
    return c.implication("equal_clique_degrees")


@theorem("equal-independent-degrees-kernel", "split", "connected, all independent degrees equal implies nul(R) in nul(J)")
def _eq_s(c: SplitCase):
    return c.implication("equal_independent_degrees")


@theorem("neighbourhood-partition-nonsingular", "split", "S-neighbourhoods partitioning K imply Sp nonsingular")
def _partition_cover(c: SplitCase):
    res = c.implication("neighborhood_partition")
    if res is None:
        return None
    return res and c.nul == 0


@theorem("neighbourhood-sum-constraint", "split", "N(v) cap S a disjoint union of N(u) cap S over u in W gives y_v = sum y_u on im(R)")
def _nsum(c: SplitCase):
    sp = c.sp
    adj = sp.graph.adj
    smask = mask_of(sp.S)
    nb = {v: adj[v] & smask for v in sp.K}
    rng = SplitMix64(c.seed ^ 0x5EED)
    x = tuple(rng.below(11) - 5 for _ in range(sp.s))
    y = dict(zip(sp.K, sp.R @ x))
    found = False
    for v in sp.K:
        cands = [u for u in sp.K if u != v and nb[u] & ~nb[v] == 0 and nb[u]]
        if len(cands) > 10:
            continue
        for size in range(len(cands) + 1):
            for W in combinations(cands, size):
                union = 0
                ok = True
                for u in W:
                    if union & nb[u]:
                        ok = False
                        break
                    union |= nb[u]
                if not ok or union != nb[v]:
                    continue
                found = True
                if y[v] != sum(y[u] for u in W):
                    return False
    return True if found else None


@theorem("adjacent-twins-equal", "split", "adjacent twins carry equal entries in every kernel vector")
def _twin_entries(c: SplitCase):
    if not c.primary:
        return None
    g = c.g
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if g.adj[u] >> v & 1 and are_twins(g, u, v)]
    if not pairs:
        return None
    return all(x[u] == x[v] for x in c.gc.kernel.vectors for u, v in pairs)


@theorem("partitions-brute-force", "split", "all_s_partitions equals the exhaustive list of s-partitions")
def _parts_brute(c: SplitCase):
    b = c.brute_tables
    if b is None:
        return None
    return subset_bitset(p.clique for p in all_s_partitions(c.sp)) == b["partitions"]


@theorem("partitions-closed-form", "split", "the s-partitions are exactly the closed-form catalogue for the shape of W")
def _parts_closed(c: SplitCase):
    sw = c.swing
    closed = closed_form_partitions(sw.K_star, sw.S_star, sw.W, sw.classification)
    return set(closed) == set(sw.all_partitions) and len(closed) == len(sw.all_partitions)


@theorem("closed-form-extremal-sets", "split", "per W-case: the unique maximum clique / independent set and the stated sizes")
def _closed_extremal(c: SplitCase):
    sw = c.swing
    kind = sw.classification
    if kind == "empty":
        return None
    omega, alpha = clique_and_independence_numbers(c.sp)
    Ks, Ss, W = sw.K_star, sw.S_star, sw.W
    cliques = [p.clique for p in sw.all_partitions]
    indeps = [p.independent for p in sw.all_partitions]
    big_k = max(len(k) for k in cliques)
    big_s = max(len(s) for s in indeps)
    if kind == "singleton":
        return ([k for k in cliques if len(k) == big_k] == [Ks | W]
                and [s for s in indeps if len(s) == big_s] == [Ss | W])
    if kind == "clique":
        return ([k for k in cliques if len(k) == big_k] == [Ks | W]
                and all(len(Ss | {w}) == alpha for w in W))
    return ([s for s in indeps if len(s) == big_s] == [Ss | W]
            and all(len(Ks | {w}) == omega for w in W))


@theorem("vertex-tripartition", "split", "V = K* + W + S* as a disjoint union, the same from every s-partition")
def _tri(c: SplitCase):
    sw = c.swing
    parts = (sw.K_star, sw.W, sw.S_star)
    disjoint = not (parts[0] & parts[1] or parts[0] & parts[2] or parts[1] & parts[2])
    return disjoint and parts[0] | parts[1] | parts[2] == frozenset(range(c.g.n))


@theorem("swing-twin-class", "split", "a nonempty W is the twin class of each of its members, and a clique or independent set")
def _swing_twins(c: SplitCase):
    W = c.swing.W
    if not W:
        return None
    classes = twin_classes(c.g)
    cls = next(cl for cl in classes if min(W) in cl)
    if cls != W:
        return False
    kind = c.swing.classification
    if kind == "clique":
        return is_clique(c.g, W)
    if kind == "independent_set":
        return is_independent(c.g, W)
    return len(W) == 1


@theorem("balance-classification", "split", "balanced iff omega + alpha = n iff a unique s-partition iff W is empty")
def _balance(c: SplitCase):
    omega, alpha = clique_and_independence_numbers(c.sp)
    balanced = balance_class(c.sp) == "balanced"
    unique = len(c.swing.all_partitions) == 1
    return balanced == (omega + alpha == c.g.n) == unique == (not c.swing.W)


@theorem("clique-independence-numbers", "split", "omega and alpha read off one s-partition match brute force")
def _omega_alpha(c: SplitCase):
    b = c.brute_tables
    if b is None:
        return None
    return clique_and_independence_numbers(c.sp) == (b["omega"], b["alpha"])


@theorem("maximum-sets-brute-force", "split", "maximum cliques and maximum independent sets match brute force")
def _max_sets(c: SplitCase):
    b = c.brute_tables
    if b is None:
        return None
    return (subset_bitset(maximum_cliques(c.sp)) == b["max_cliques"]
            and subset_bitset(maximum_independent_sets(c.sp)) == b["max_independent"])


@theorem("unbalanced-partition-sizes", "split", "unbalanced: every s-partition has (|K|,|S|) in {(omega, alpha-1), (omega-1, alpha)}")
def _unb_sizes(c: SplitCase):
    if not c.swing.W:
        return None
    omega, alpha = clique_and_independence_numbers(c.sp)
    return all((len(p.clique), len(p.independent)) in {(omega, alpha - 1), (omega - 1, alpha)}
               for p in c.swing.all_partitions)


@theorem("unbalanced-extremal-sets", "split", "unbalanced: every maximum clique (independent set) is the clique (independent) side of an s-partition")
def _unb_extremal(c: SplitCase):
    if not c.swing.W:
        return None
    cl = {p.clique for p in c.swing.all_partitions}
    ind = {p.independent for p in c.swing.all_partitions}
    return (all(q in cl for q in maximum_cliques(c.sp))
            and all(s in ind for s in maximum_independent_sets(c.sp)))


@theorem("balanced-unique-max-clique", "split", "balanced: K is the only maximum clique iff no independent vertex has degree |K| - 1")
def _bal_clique(c: SplitCase):
    if c.swing.W:
        return None
    deg = c.g.degrees()
    unique = maximum_cliques(c.sp) == [c.K]
    return unique == (not any(deg[v] == c.sp.k - 1 for v in c.sp.S))


@theorem("balanced-unique-max-independent", "split", "balanced: S is the only maximum independent set iff no clique vertex has exactly one S-neighbour")
def _bal_indep(c: SplitCase):
    if c.swing.W:
        return None
    smask = mask_of(c.sp.S)
    unique = maximum_independent_sets(c.sp) == [c.S]
    return unique == (not any(bin(c.g.adj[x] & smask).count("1") == 1 for x in c.sp.K))


@theorem("unbalanced-support", "split", "unbalanced: Supp(Sp) lies in every maximum independent set")
def _unb_supp(c: SplitCase):
    return c.implication("unbalanced_support")


@theorem("threshold-support", "split", "threshold graphs: Supp(Sp) lies in every maximum independent set")
def _thr_supp(c: SplitCase):
    return c.implication("threshold_support")


@theorem("swing-singleton-support", "split", "W = {w}: Supp(Sp) in S* + w")
def _sw1(c: SplitCase):
    return c.implication("swing_singleton")


@theorem("swing-clique-support", "split", "W a clique of size >= 2: Supp(Sp) in S*, so W misses the support")
def _sw2(c: SplitCase):
    return c.implication("swing_clique")


@theorem("swing-independent-support", "split", "W independent of size >= 2: W in Supp(Sp) in S* + W")
def _sw3(c: SplitCase):
    return c.implication("swing_independent")


@theorem("rank-one-biadjacency", "split", "connected, K covered by S-neighbourhoods, rank(R) = 1 implies R = J and both sides pairwise twins")
def _rank1(c: SplitCase):
    return c.implication("rank_one_R")


@theorem("clique-support-nullity", "split", "Supp(Sp) meeting K implies nul(Sp) = nul(R) + 1")
def _cs_nullity(c: SplitCase):
    if not c.support & c.K:
        return None
    return c.nul == c.nul_R + 1 and c.report.support_meets_clique


@theorem("clique-support-iff-dimension-one", "split", "for a nonzero clique-kernel, Supp meets K iff its dimension is 1")
def _cs_dim(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim == 0:
        return None
    return bool(c.support & c.K) == (c.ck_raw.dim == 1)


@theorem("nullity-one-iff-R-injective", "split", "Supp meeting K, |K| >= 2: nul(Sp) = 1 iff nul(R) = 0")
def _n1_inj(c: SplitCase):
    if not _require_clique(c) or not c.support & c.K:
        return None
    return (c.nul == 1) == (c.nul_R == 0)


@theorem("structured-basis", "split", "the structured basis is independent, annihilated by A(Sp), and spans the brute-force kernel")
def _basis(c: SplitCase):
    kb = c.basis
    vecs = kb.vectors.vectors
    n = c.g.n
    if kb.order != c.sp.order or len(vecs) != c.nul:
        return False
    if any(any(c.A @ v) for v in vecs):
        return False
    if vecs and rank(QMatrix._wrap(vecs, len(vecs), n)) != len(vecs):
        return False
    if not _span_equal(list(vecs), list(c.kernel_ks), n):
        return False
    tags = [t for t, _ in kb.structure]
    return tags.count("clique_supported") == (1 if c.support & c.K else 0)


@theorem("structured-basis-rank", "split", "clique-supported kernel: rank(Sp) = rank(R) + |K| - 1")
def _basis_rank(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim != 1:
        return None
    r = c.g.n - c.nul
    return r == c.rank_R + c.sp.k - 1 == c.basis.rank


def _reduced(c: SplitCase) -> tuple[SplitGraph, GraphCase, dict]:
    keep = sorted(c.sp.K + c.basis.pivot_vertices)
    sub = induced_subgraph(c.g, keep)
    pos = {v: i for i, v in enumerate(keep)}
    spr = SplitGraph.with_clique(sub, [pos[v] for v in c.sp.K])
    return spr, GraphCase(sub), pos


@theorem("reduced-graph-clique-kernel", "split", "keeping a column basis P of R preserves the clique-kernel and gives nullity one")
def _red_ck(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim != 1:
        return None
    spr, gcr, _ = _reduced(c)
    return gcr.nullity == 1 and clique_kernel(spr) == clique_kernel(c.sp)


@theorem("reduced-graph-support", "split", "Supp(Sp') cap K = Supp(Sp) cap K and Supp(Sp') cap S' lies in Supp(Sp)")
def _red_supp(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim != 1:
        return None
    spr, gcr, pos = _reduced(c)
    back = {i: v for v, i in pos.items()}
    supp_r = frozenset(back[i] for i in gcr.support)
    return supp_r & c.K == c.support & c.K and supp_r - c.K <= c.support


@theorem("reduced-graph-image-basis", "split", "for s in Supp(Sp'), the columns of A(Sp) over V(Sp') - s form a basis of im(Sp)")
def _red_image(c: SplitCase):
    if not _require_clique(c) or c.ck_raw.dim != 1:
        return None
    spr, gcr, pos = _reduced(c)
    back = {i: v for v, i in pos.items()}
    A = c.gc.A
    r = c.g.n - c.nul
    keep = sorted(pos)
    for i in sorted(gcr.support):
        cols = [v for v in keep if v != back[i]]
        if len(cols) != r or rank(A.submatrix(range(c.g.n), cols)) != r:
            return False
    return True


@theorem("determinant-formula", "split", "det A(Sp) = (-1)^(k-1) (k-1) det(R^t R - r r^t/(k-1))")
def _det(c: SplitCase):
    if not _require_clique(c):
        return None
    return det_split_schur(c.sp) == det_bareiss(c.A)


@theorem("determinant-lemma-form", "split", "with nul(R) = 0 the determinant-lemma form gives the same determinant")
def _det_lemma(c: SplitCase):
    if not _require_clique(c) or c.nul_R:
        return None
    return det_split_lemma(c.sp) == det_bareiss(c.A)


@theorem("singularity-criterion", "split", "with nul(R) = 0: Sp singular iff 1^t R (R^t R)^{-1} R^t 1 = |K| - 1")
def _sing(c: SplitCase):
    if not _require_clique(c) or c.nul_R:
        return None
    return singularity_criterion(c.sp) == (c.nul > 0)


# -- compositions -------------------------------------------------------------


class ComposeCase:
    def __init__(self, sp: SplitGraph, other, square: bool = False):
        self.sp = sp
        self.other = other
        self.square = square

    @cached_property
    def G(self) -> Graph:
        return self.other.graph if isinstance(self.other, SplitGraph) else self.other

    @cached_property
    def composite(self) -> Graph:
        return tyshkevich_compose(self.sp, self.G)


@theorem("composition-split", "compose", "Sp o G' with G' split is split with s-partition (K + K', S + S')")
def _comp_split(c: ComposeCase):
    if not isinstance(c.other, SplitGraph):
        return None
    h = compose_split(c.sp, c.other)
    return h.graph == c.composite and recognize_split(c.composite) is not None


@theorem("composition-block-form", "compose", "A(Sp o G) = [[J-I, R, J], [R^t, 0, 0], [J^t, 0, A(G)]] in the order (K, S, V(G))")
def _comp_block(c: ComposeCase):
    sp, G = c.sp, c.G
    k, s, m = sp.k, sp.s, G.n
    top = (QMatrix.ones(k, k) - QMatrix.identity(k)).hstack(sp.R).hstack(QMatrix.ones(k, m))
    mid = sp.R.T.hstack(QMatrix.zeros(s, s)).hstack(QMatrix.zeros(s, m))
    bot = QMatrix.ones(m, k).hstack(QMatrix.zeros(m, s)).hstack(adjacency_matrix(G))
    expected = top.vstack(mid).vstack(bot)
    return adjacency_matrix(c.composite, composition_order(sp, G)) == expected


@theorem("composition-edge-count", "compose", "|E(Sp o G)| = |E(Sp)| + |E(G)| + |K| |V(G)|")
def _comp_edges(c: ComposeCase):
    return c.composite.num_edges == c.sp.graph.num_edges + c.G.num_edges + c.sp.k * c.G.n


@theorem("composition-kernel-embedding", "compose", "(0, z, 0) is a kernel vector of Sp o G for z in nul(R); so nul(Sp o G) >= nul(R)")
def _comp_kernel(c: ComposeCase):
    emb = embedded_kernel_vectors(c.sp, c.G)
    order = composition_order(c.sp, c.G)
    kernel = brute_nullspace(c.composite)
    for v in emb.vectors:
        natural = [0] * len(order)
        for pos, vert in enumerate(order):
            natural[vert] = v[pos]
        if not kernel.contains(natural):
            return False
    return kernel.dim >= c.sp.s - rank(c.sp.R) == emb.dim


@theorem("square-composition", "square", "|K| = |S| on both sides: Sp o Sp' nonsingular iff both factors are")
def _square_composition(c: ComposeCase):
    composite, left, right = square_composition_nonsingularity(c.sp, c.other)
    oracle = (det_bareiss(adjacency_matrix(c.composite)) != 0,
              det_bareiss(adjacency_matrix(c.sp.graph)) != 0,
              det_bareiss(adjacency_matrix(c.other.graph)) != 0)
    return (composite, left, right) == oracle and composite == (left and right)


FAMILIES = ("graph", "nullity_one", "split", "compose", "square")
_BY_FAMILY = {f: [t for t in CATALOG if t.family == f] for f in FAMILIES}
THEOREM_IDS = tuple(t.id for t in CATALOG)
assert len(set(THEOREM_IDS)) == len(THEOREM_IDS)
