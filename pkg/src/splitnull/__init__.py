"""Exact nullspace analysis of split graphs.

A split graph is stored as a :class:`~splitnull.graphs.Graph` plus one
s-partition ``(K, S)``; all arithmetic is over the rationals.  The brute-force
oracle and the theorem census live in :mod:`splitnull.harness`.
"""

from .composition import (
    compose_split,
    composition_order,
    embedded_kernel_vectors,
    square_composition_nonsingularity,
    tyshkevich_compose,
)
from .determinant import det_split_lemma, det_split_schur, singularity_criterion, singularity_form
from .errors import DomainError, GraphFormatError, TheoremViolation
from .graphs import (
    Graph,
    adjacency_matrix,
    complement,
    parse_edge_list,
    parse_graph6,
    twin_classes,
    write_edge_list,
    write_graph6,
)
from .linalg import QMatrix, SubspaceBasis, adjugate, det_bareiss, nullspace_basis, rank
from .nullspace import (
    KernelBasis,
    NullityReport,
    clique_kernel,
    deletion_image_bases,
    image_basis_by_deletion,
    nullity,
    nullity_one_report,
    structured_kernel_basis,
    support,
    support_location_predicates,
)
from .split import (
    SPartition,
    SplitGraph,
    SwingReport,
    all_s_partitions,
    balance_class,
    maximum_cliques,
    maximum_independent_sets,
    recognize_split,
    swing_report,
    threshold_graph,
)

__all__ = [
    "Graph", "QMatrix", "SubspaceBasis", "SPartition", "SplitGraph", "SwingReport",
    "KernelBasis", "NullityReport", "DomainError", "GraphFormatError", "TheoremViolation",
    "parse_graph6", "write_graph6", "parse_edge_list", "write_edge_list",
    "adjacency_matrix", "complement", "twin_classes",
    "rank", "nullspace_basis", "det_bareiss", "adjugate",
    "recognize_split", "all_s_partitions", "swing_report", "balance_class",
    "maximum_cliques", "maximum_independent_sets", "threshold_graph",
    "clique_kernel", "nullity", "support", "structured_kernel_basis",
    "nullity_one_report", "image_basis_by_deletion", "deletion_image_bases",
    "support_location_predicates",
    "det_split_schur", "det_split_lemma", "singularity_form", "singularity_criterion",
    "tyshkevich_compose", "compose_split", "composition_order",
    "embedded_kernel_vectors", "square_composition_nonsingularity",
]
