"""Tyshkevich composition and how kernels travel through it.

``python3 demos/composition_demo.py``
"""

from splitnull import (
    Graph,
    SplitGraph,
    det_bareiss,
    embedded_kernel_vectors,
    nullity,
    square_composition_nonsingularity,
    tyshkevich_compose,
    write_graph6,
)
from splitnull.gallery import cycle_graph, support_in_s_example, p3, p4
from splitnull.graphs import adjacency_matrix
from splitnull.linalg import rank

# P4 composed with C4: every clique vertex of P4 joins every vertex of C4
g = tyshkevich_compose(p4(), cycle_graph(4))
print(f"P4 o C4: {g.n} vertices, {g.num_edges} edges, graph6 {write_graph6(g)}")

# a left factor with nul(R) > 0 keeps those kernel vectors in any composite
left = support_in_s_example().split
for right in (cycle_graph(4), p3().graph):
    h = tyshkevich_compose(left, right)
    emb = embedded_kernel_vectors(left, right)
    null_h = h.n - rank(adjacency_matrix(h))
    print(f"support-in-S example o G (|G|={right.n}): nullity {null_h}, {emb.dim} from nul(R) padded with zeros")

# square factors: the composite is nonsingular exactly when both factors are
factors = {
    "P4": p4(),
    "2K2+": SplitGraph.with_clique(Graph(4, [(0, 1), (0, 2), (1, 3)]), [0, 1]),
    "J": SplitGraph.with_clique(Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]), [0, 1]),
}
print()
print("square factors (|K| = |S| = 2), det A of each:")
for name, sp in factors.items():
    print(f"   {name:5s} det {det_bareiss(sp.adjacency())}, nullity {nullity(sp).nullity}")
print()
for a, sa in factors.items():
    for b, sb in factors.items():
        comp, l, r = square_composition_nonsingularity(sa, sb)
        print(f"   {a:5s} o {b:5s}: composite nonsingular {comp!s:5s} (factors {l}, {r})")
