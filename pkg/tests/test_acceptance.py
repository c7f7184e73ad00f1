"""One test per acceptance criterion, all fed by a single census run.

The census covers every labeled graph on up to ``N_MAX`` vertices (default 7),
``RANDOM_ROUNDS`` random split graphs with up to 40 vertices, ``COMPOSE_PAIRS``
random composition pairs and every pair of square factors with up to 6
vertices each.  ``SPLITNULL_ACCEPTANCE_NMAX`` and ``SPLITNULL_WORKERS`` shrink
or parallelise the run; the thresholds below assume the defaults.
"""

import os

import pytest

from splitnull.composition import tyshkevich_compose
from splitnull.gallery import cycle_graph, support_in_s_example, full_support_example, missed_vertex_example, p4
from splitnull.harness.census import census_verify
from splitnull.harness.generators import ENUMERATION_CAP
from splitnull.linalg import image_contains, integer_normalize
from splitnull.nullspace import nullity, structured_kernel_basis, support_location_predicates

N_MAX = int(os.environ.get("SPLITNULL_ACCEPTANCE_NMAX", ENUMERATION_CAP))
WORKERS = int(os.environ.get("SPLITNULL_WORKERS", os.cpu_count() or 1))
RANDOM_ROUNDS = 10_000
COMPOSE_PAIRS = 1_000
SQUARE_MAX_K = 3
SEED = 20240611

# labeled graphs and labeled split graphs on exactly n vertices, n = 1..7
GRAPHS_BY_N = [1, 2, 8, 64, 1024, 32768, 2097152]
SPLIT_BY_N = [1, 2, 8, 58, 632, 9654, 202484]


@pytest.fixture(scope="session")
def census():
    return census_verify(N_MAX, RANDOM_ROUNDS, SEED, compose_pairs=COMPOSE_PAIRS,
                         square_max_k=SQUARE_MAX_K, workers=WORKERS)


def line(request, number, title, problems):
    status = "PASS" if not problems else "FAIL"
    text = f"criterion {number:2d} [{status}] {title}" + ("" if not problems else f": {'; '.join(problems)}")
    request.config.acceptance_lines.append(text)
    print(text)
    assert not problems, text


def clean(census, ids, min_pass=1):
    problems = []
    for tid in ids:
        counts = census.theorems[tid]
        if counts["fail"]:
            examples = [g for g, t in census.counterexamples if t == tid][:3]
            problems.append(f"{tid} failed {counts['fail']}x, e.g. {examples}")
        elif counts["pass"] < min_pass:
            problems.append(f"{tid} exercised only {counts['pass']}x")
    return problems


def test_criterion_01_headline_nullity_formula(census, request):
    problems = clean(census, ["nullity-formula", "support-matches-oracle"])
    if census.graphs_examined != sum(GRAPHS_BY_N[:N_MAX]):
        problems.append(f"examined {census.graphs_examined} graphs")
    if census.split_count != sum(SPLIT_BY_N[:N_MAX]):
        problems.append(f"found {census.split_count} split graphs")
    if census.random_split_graphs != RANDOM_ROUNDS:
        problems.append(f"only {census.random_split_graphs} random split graphs")
    line(request, 1, "nul(Sp) = nul(R) + dim(clique-kernel), exhaustive and random", problems)


def test_criterion_02_clique_kernel_dimension(census, request):
    problems = clean(census, ["clique-kernel-dimension", "clique-kernel-generator"])
    line(request, 2, "dim(clique-kernel) in {0, 1}", problems)


def test_criterion_03_determinant(census, request):
    problems = clean(census, ["determinant-formula", "determinant-lemma-form", "singularity-criterion"])
    line(request, 3, "Schur determinant, lemma form and singularity criterion", problems)


def test_criterion_04_golden_examples(request):
    problems = []
    ex = support_in_s_example()
    rep = nullity(ex.split)
    if ex.to_labels(rep.support) != {5, 6, 7, 8, 9} or rep.support != frozenset(ex.split.S):
        problems.append("support-in-S example support")
    if (rep.nullity, rep.clique_kernel.dimension) != (2, 0):
        problems.append("support-in-S example nullity / clique-kernel")
    if image_contains(ex.split.R, (1,) * ex.split.k):
        problems.append("support-in-S example: ones in im(R)")
    for ex, k_part, s_part in ((full_support_example(), [1, 1, -2, -1, -1, -1], [1, 2, 1, 1]),
                                (missed_vertex_example(), [1, 0, 1, 1, -1], [-1, -1, 1, -1])):
        kb = structured_kernel_basis(ex.split)
        if kb.nullity != 1:
            problems.append(f"nullity {kb.nullity} for labels {ex.labels}")
            continue
        x = integer_normalize(kb.vectors.vectors[0])
        if list(x[:ex.split.k]) != k_part or list(x[ex.split.k:]) != s_part:
            problems.append(f"kernel vector {x}")
    line(request, 4, "golden examples", problems)


def test_criterion_05_structured_basis(census, request):
    problems = clean(census, ["structured-basis", "structured-basis-rank", "reduced-graph-clique-kernel",
                              "reduced-graph-support", "reduced-graph-image-basis"])
    line(request, 5, "structured kernel basis and rank(Sp) = rank(R) + |K| - 1", problems)


def test_criterion_06_nullity_one(census, request):
    ids = ["adjugate-rank-one", "adjugate-diagonal", "adjugate-support", "kernel-square-identity",
           "deletion-image-basis"]
    problems = clean(census, ids)
    runs = {sum(census.theorems[t][k] for k in ("pass", "not_applicable")) for t in ids}
    if len(runs) != 1:
        problems.append(f"nullity-one checks ran on differing graph counts {sorted(runs)}")
    line(request, 6, "nullity-one adjugate suite on every nul = 1 graph", problems)


def test_criterion_07_swing_and_partitions(census, request):
    ids = ["partitions-brute-force", "partitions-closed-form", "closed-form-extremal-sets",
           "vertex-tripartition", "swing-twin-class", "balance-classification",
           "unbalanced-partition-sizes", "unbalanced-extremal-sets", "unbalanced-support",
           "threshold-support", "swing-singleton-support", "swing-clique-support",
           "swing-independent-support", "balanced-unique-max-clique", "balanced-unique-max-independent",
           "maximum-sets-brute-force", "clique-independence-numbers"]
    line(request, 7, "s-partitions, swing vertices and support containment", clean(census, ids))


def test_criterion_08_composition(census, request):
    problems = clean(census, ["composition-split", "composition-block-form", "composition-edge-count",
                              "composition-kernel-embedding", "square-composition"])
    if census.composition_pairs != COMPOSE_PAIRS:
        problems.append(f"{census.composition_pairs} composition pairs")
    if census.square_pairs != 530 ** 2:
        problems.append(f"{census.square_pairs} square pairs")
    h = tyshkevich_compose(p4(), cycle_graph(4))
    if h.num_edges != 15:
        problems.append(f"P4 o C4 has {h.num_edges} edges")
    line(request, 8, "composition embedding, square case and P4 o C4", problems)


def test_criterion_09_graph6(census, request):
    problems = clean(census, ["graph6-roundtrip"], min_pass=sum(GRAPHS_BY_N[:N_MAX]))
    line(request, 9, "graph6 round trip over the census", problems)


def test_criterion_10_sufficient_conditions(census, request):
    problems = clean(census, ["ones-in-image-support", "equal-clique-degrees-support",
                              "neighbourhood-partition-nonsingular", "singular-if-k-less-than-s",
                              "square-singular-iff-R-singular"])
    pred = support_location_predicates(support_in_s_example().split)
    if pred["ones_in_image_R"].hypothesis or not pred.ones_not_in_image_yet_support_in_S:
        problems.append("support-in-S example converse failure not reproduced")
    line(request, 10, "sufficient conditions on the support", problems)
