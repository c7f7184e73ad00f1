"""Exhaustive and randomized census over the theorem catalogue.

Work is cut into independent units (a block of graph codes, a range of random
rounds, a range of composition pairs).  Each unit yields a
:class:`CensusReport`; reports merge associatively, and the final report is
the merge of all units in a fixed order, so the JSON output depends only on
the parameters.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from ..graphs import Graph, induced_subgraph, mask_of, members, write_graph6
from ..split import SplitGraph, all_s_partitions, balance_class, recognize_split
from .catalog import CATALOG, ComposeCase, GraphCase, SplitCase, run_family
from .generators import (
    ENUMERATION_CAP,
    ENUMERATION_HARD_CAP,
    SplitMix64,
    random_graph,
    random_split_graph,
)
from .oracle import code_of, edge_slots, graph6_from_code, graph_from_code, oracle_block

__all__ = [
    "CensusReport",
    "census_verify",
    "verify_graph",
    "TALLY_NAMES",
    "BLOCK_SIZE",
    "RANDOM_MAX_N",
    "BRUTE_MAX_N",
]

BLOCK_SIZE = 1 << 14
RANDOM_MAX_N = 40
BRUTE_MAX_N = 12
COUNTEREXAMPLES_PER_THEOREM = 50
WITNESSES_PER_TALLY = 5

TALLY_NAMES = (
    # unbalanced split graphs whose core Sp - W is itself unbalanced
    "core-unbalanced",
    # (graph, s-partition) pairs with 1 not in im(R) yet Supp(Sp) inside S
    "ones-outside-image-support-in-S",
)


def _witness_key(g6: str) -> tuple:
    return (len(g6), g6)


@dataclass
class CensusReport:
    n_range: list = field(default_factory=lambda: [0, 0])
    graphs_examined: int = 0
    split_count: int = 0
    partitions_examined: int = 0
    random_split_graphs: int = 0
    composition_pairs: int = 0
    square_pairs: int = 0
    seed: int = 0
    theorems: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    tallies: dict = field(default_factory=dict)

    def __post_init__(self):
        for th in CATALOG:
            self.theorems.setdefault(th.id, {"pass": 0, "fail": 0, "not_applicable": 0})
        for name in TALLY_NAMES:
            self.tallies.setdefault(name, {"examined": 0, "hits": 0, "witnesses": []})

    # -- recording -----------------------------------------------------------

    def record(self, tid: str, outcome: Optional[bool], graph6: str) -> None:
        counts = self.theorems[tid]
        if outcome is None:
            counts["not_applicable"] += 1
        elif outcome:
            counts["pass"] += 1
        else:
            counts["fail"] += 1
            if counts["fail"] <= COUNTEREXAMPLES_PER_THEOREM:
                self.counterexamples.append([graph6, tid])

    def tally(self, name: str, hit: bool, graph6: str) -> None:
        t = self.tallies[name]
        t["examined"] += 1
        if hit:
            t["hits"] += 1
            if graph6 not in t["witnesses"]:
                t["witnesses"] = sorted(t["witnesses"] + [graph6], key=_witness_key)[:WITNESSES_PER_TALLY]

    # -- aggregation ---------------------------------------------------------

    @property
    def ok(self) -> bool:
        return not self.counterexamples and all(c["fail"] == 0 for c in self.theorems.values())

    def failures(self) -> dict:
        return {tid: c["fail"] for tid, c in self.theorems.items() if c["fail"]}

    def merge(self, other: "CensusReport") -> "CensusReport":
        out = CensusReport(
            n_range=[min(self.n_range[0], other.n_range[0]), max(self.n_range[1], other.n_range[1])],
            graphs_examined=self.graphs_examined + other.graphs_examined,
            split_count=self.split_count + other.split_count,
            partitions_examined=self.partitions_examined + other.partitions_examined,
            random_split_graphs=self.random_split_graphs + other.random_split_graphs,
            composition_pairs=self.composition_pairs + other.composition_pairs,
            square_pairs=self.square_pairs + other.square_pairs,
            seed=self.seed,
        )
        for tid in out.theorems:
            a, b = self.theorems[tid], other.theorems[tid]
            out.theorems[tid] = {key: a[key] + b[key] for key in a}
        per: dict = {}
        for g6, tid in sorted(self.counterexamples + other.counterexamples, key=lambda e: (e[1], _witness_key(e[0]))):
            if [g6, tid] not in per.setdefault(tid, []) and len(per[tid]) < COUNTEREXAMPLES_PER_THEOREM:
                per[tid].append([g6, tid])
        out.counterexamples = sorted((e for lst in per.values() for e in lst), key=lambda e: (e[1], _witness_key(e[0])))
        for name in TALLY_NAMES:
            a, b = self.tallies[name], other.tallies[name]
            wit = sorted(set(a["witnesses"]) | set(b["witnesses"]), key=_witness_key)
            out.tallies[name] = {
                "examined": a["examined"] + b["examined"],
                "hits": a["hits"] + b["hits"],
                "witnesses": wit[:WITNESSES_PER_TALLY],
            }
        return out

    def as_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "graphs_examined": self.graphs_examined,
            "split_count": self.split_count,
            "partitions_examined": self.partitions_examined,
            "random_split_graphs": self.random_split_graphs,
            "composition_pairs": self.composition_pairs,
            "square_pairs": self.square_pairs,
            "seed": self.seed,
            "theorems": self.theorems,
            "counterexamples": self.counterexamples,
            "tallies": self.tallies,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "CensusReport":
        fields = {k: v for k, v in data.items() if k != "ok"}
        return cls(**fields)


# -- per-object drivers --------------------------------------------------------


def _split_cases(report: CensusReport, gc: GraphCase, partition_masks, brute, seed, g6) -> None:
    rec = lambda tid, out: report.record(tid, out, g6)  # noqa: E731
    for idx, kmask in enumerate(partition_masks):
        sp = SplitGraph.with_clique(gc.g, members(kmask))
        case = SplitCase(sp, gc, brute, primary=idx == 0, seed=seed)
        run_family("split", case, rec)
        report.partitions_examined += 1
        if idx == 0:
            _tally_core(report, case, g6)
        _tally_ones(report, case, g6)


def _tally_core(report: CensusReport, case: SplitCase, g6: str) -> None:
    try:
        sw = case.swing
    except Exception:  # noqa: BLE001 - the catalogue already records the failure
        return
    if not sw.W:
        return
    core = sorted(sw.K_star | sw.S_star)
    pos = {v: i for i, v in enumerate(core)}
    sub = induced_subgraph(case.g, core)
    sp = SplitGraph.with_clique(sub, [pos[v] for v in sw.K_star])
    report.tally("core-unbalanced", balance_class(sp) == "unbalanced", g6)


def _tally_ones(report: CensusReport, case: SplitCase, g6: str) -> None:
    try:
        pred = case.predicates
    except Exception:  # noqa: BLE001
        return
    if pred["ones_in_image_R"].hypothesis:
        return
    report.tally("ones-outside-image-support-in-S", pred.ones_not_in_image_yet_support_in_S, g6)


def _exhaustive_unit(n: int, start: int, stop: int, seed: int) -> CensusReport:
    report = CensusReport(n_range=[n, n], seed=seed)
    block = oracle_block(n, start, stop)
    for i, code in enumerate(range(start, stop)):
        g = graph_from_code(n, code)
        g6 = graph6_from_code(n, code)
        rec = lambda tid, out: report.record(tid, out, g6)  # noqa: E731
        is_split = bool(block.split[i])
        parts = block.partitions.get(code)
        gc = GraphCase(g, code, is_split, bool(block.complement_split[i]), parts)
        run_family("graph", gc, rec)
        report.graphs_examined += 1
        if gc.nullity == 1:
            run_family("nullity_one", gc, rec)
        if not is_split:
            continue
        report.split_count += 1
        brute = {
            "partitions": parts,
            "max_cliques": block.max_cliques[code],
            "max_independent": block.max_independent[code],
            "omega": block.omega[code],
            "alpha": block.alpha[code],
        }
        masks = [m for m in range(1 << n) if parts >> m & 1]
        _split_cases(report, gc, masks, brute, code, g6)
    return report


def _round_seed(seed: int, index: int, salt: int) -> int:
    return SplitMix64((seed ^ salt) + index * 0x9E3779B97F4A7C15).next()


def _random_unit(seed: int, start: int, stop: int, max_n: int) -> CensusReport:
    report = CensusReport(seed=seed)
    for i in range(start, stop):
        rng = SplitMix64(_round_seed(seed, i, 0x5A17))
        n = 2 + rng.below(max_n - 1)
        k = 2 + rng.below(n - 1)
        p = Fraction(1 + rng.below(7), 8)
        sp = random_split_graph(k, n - k, p, rng.next())
        g6 = write_graph6(sp.graph)
        rec = lambda tid, out: report.record(tid, out, g6)  # noqa: E731
        gc = GraphCase(sp.graph)
        run_family("graph", gc, rec)
        if gc.nullity == 1 and n <= BRUTE_MAX_N:
            run_family("nullity_one", gc, rec)
        run_family("split", SplitCase(sp, gc, None, primary=True, seed=i), rec)
        report.random_split_graphs += 1
    return report


def _compose_unit(seed: int, start: int, stop: int) -> CensusReport:
    report = CensusReport(seed=seed)
    for i in range(start, stop):
        rng = SplitMix64(_round_seed(seed, i, 0xC0DE))
        k = 1 + rng.below(5)
        s = rng.below(5)
        left = random_split_graph(k, s, Fraction(1, 2), rng.next())
        if rng.below(2):
            k2 = 1 + rng.below(4)
            right = random_split_graph(k2, rng.below(4), Fraction(1, 2), rng.next())
        else:
            right = random_graph(1 + rng.below(6), Fraction(1, 2), rng.next())
        case = ComposeCase(left, right)
        g6 = write_graph6(case.composite)
        run_family("compose", case, lambda tid, out: report.record(tid, out, g6))
        report.composition_pairs += 1
    return report


def square_factors(max_k: int = 3) -> list[SplitGraph]:
    """Every split graph with ``K = 0..k-1``, ``S = k..2k-1`` for ``1 <= k <= max_k``."""
    out = []
    for k in range(1, max_k + 1):
        pairs = [(i, k + j) for i in range(k) for j in range(k)]
        clique = [(i, j) for i in range(k) for j in range(i + 1, k)]
        for bits in product((0, 1), repeat=k * k):
            edges = clique + [e for e, b in zip(pairs, bits) if b]
            out.append(SplitGraph.with_clique(Graph(2 * k, edges), range(k)))
    return out


def _square_unit(lefts: range, max_k: int) -> CensusReport:
    report = CensusReport()
    factors = square_factors(max_k)
    for i in lefts:
        for right in factors:
            case = ComposeCase(factors[i], right, square=True)
            run_family("square", case, lambda tid, out: report.record(tid, out, write_graph6(case.composite)))
            report.square_pairs += 1
    return report


def _run_unit(unit: tuple) -> CensusReport:
    kind, *args = unit
    if kind == "exhaustive":
        return _exhaustive_unit(*args)
    if kind == "random":
        return _random_unit(*args)
    if kind == "compose":
        return _compose_unit(*args)
    return _square_unit(*args)


def _units(n_max, random_rounds, seed, compose_pairs, square_max_k, random_max_n, block_size):
    units = []
    for n in range(1, n_max + 1):
        total = 1 << len(edge_slots(n))
        for start in range(0, total, block_size):
            units.append(("exhaustive", n, start, min(total, start + block_size), seed))
    chunk = 250
    for start in range(0, random_rounds, chunk):
        units.append(("random", seed, start, min(random_rounds, start + chunk), random_max_n))
    for start in range(0, compose_pairs, chunk):
        units.append(("compose", seed, start, min(compose_pairs, start + chunk)))
    if square_max_k:
        nf = len(square_factors(square_max_k))
        step = 16
        for start in range(0, nf, step):
            units.append(("square", range(start, min(nf, start + step)), square_max_k))
    return units


def census_verify(
    n_max: int,
    random_rounds: int = 0,
    seed: int = 0,
    *,
    compose_pairs: int = 0,
    square_max_k: int = 0,
    random_max_n: int = RANDOM_MAX_N,
    workers: int = 1,
    allow_large: bool = False,
    block_size: int = BLOCK_SIZE,
) -> CensusReport:
    """Check the whole catalogue over all labeled graphs on ``1..n_max`` vertices.

    ``random_rounds`` random split graphs (``|K| >= 2``, up to ``random_max_n``
    vertices), ``compose_pairs`` random composition pairs and, when
    ``square_max_k`` is positive, every pair of square factors with
    ``|K| = |S| <= square_max_k`` are checked as well.
    """
    cap = ENUMERATION_HARD_CAP if allow_large else ENUMERATION_CAP
    if n_max > cap:
        raise ValueError(f"n_max = {n_max} exceeds the enumeration cap {cap}")
    if random_max_n < 2:
        raise ValueError("random_max_n must be at least 2")
    units = _units(n_max, random_rounds, seed, compose_pairs, square_max_k, random_max_n, block_size)
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_unit, units))
    else:
        parts = [_run_unit(u) for u in units]
    report = CensusReport(n_range=[1 if n_max else 0, n_max], seed=seed)
    for part in parts:
        report = report.merge(part)
    report.n_range = [1 if n_max else 0, n_max]
    report.seed = seed
    return report


def verify_graph(g: Graph) -> CensusReport:
    """The full catalogue on one graph, under every s-partition it has."""
    report = CensusReport(n_range=[g.n, g.n])
    g6 = write_graph6(g)
    rec = lambda tid, out: report.record(tid, out, g6)  # noqa: E731
    if len(edge_slots(g.n)) <= 64:
        code = code_of(g)
        block = oracle_block(g.n, code, code + 1)
        gc = GraphCase(g, code, bool(block.split[0]), bool(block.complement_split[0]),
                       block.partitions.get(code))
    else:
        gc = GraphCase(g)
    run_family("graph", gc, rec)
    report.graphs_examined = 1
    if gc.nullity == 1 and g.n <= BRUTE_MAX_N:
        run_family("nullity_one", gc, rec)
    sp = recognize_split(g)
    if sp is not None:
        report.split_count = 1
        masks = sorted(mask_of(p.clique) for p in all_s_partitions(sp))
        masks.sort(key=lambda m: m != mask_of(sp.K))
        _split_cases(report, gc, masks, None, 0, g6)
    return report
