"""Command-line front end.

    splitnull recognize --input g.g6
    splitnull nullity --input g.txt --format edges
    splitnull det --input - < g.g6
    splitnull compose --left a.g6 --right b.g6
    splitnull census --n-max 5 --random 100 --seed 7

Structured output is JSON with every rational written as an exact ``"p"`` or
``"p/q"`` string.  Exit codes: 0 success, 1 negative answer (not split, or a
counterexample was found), 2 usage or parse error, 3 analysis domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .composition import compose_split, embedded_kernel_vectors, tyshkevich_compose
from .determinant import det_split_schur
from .errors import DomainError, GraphFormatError
from .graphs import Graph, adjacency_matrix, parse_edge_list, parse_graph6, write_graph6
from .linalg import det_bareiss, format_rational
from .nullspace import nullity, structured_kernel_basis, support_location_predicates
from .split import SPartition, SplitGraph, recognize_split, swing_report

__all__ = ["main", "run", "read_graph", "build_parser"]

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_GRAPH6_LINE = re.compile(r"^(>>graph6<<)?[?-~]+$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None


def read_graph(text: str, fmt: str = "auto") -> Graph:
    """Decode one graph; ``auto`` picks graph6 when the first data line looks like it."""
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines()
                      if ln.strip() and not ln.strip().startswith("#")), "")
        fmt = "graph6" if _GRAPH6_LINE.match(first) and not first.isdigit() else "edges"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _split_of(g: Graph, clique: Optional[str]) -> SplitGraph:
    if clique is None:
        sp = recognize_split(g)
        if sp is None:
            raise DomainError("graph is not split")
        return sp
    try:
        K = {int(t) for t in clique.split(",") if t.strip()}
    except ValueError:
        raise _UsageError(f"--clique expects comma-separated vertex ids, got {clique!r}") from None
    if any(not 0 <= v < g.n for v in K):
        raise DomainError(f"--clique vertex out of range 0..{g.n - 1}")
    try:
        return SplitGraph(g, SPartition(frozenset(K), frozenset(range(g.n)) - K))
    except ValueError:
        raise DomainError("--clique does not give an s-partition (clique side must be complete, the rest edgeless)") from None


def _fr(v) -> list:
    return [format_rational(x) for x in v]


def _partition(sp: SplitGraph) -> dict:
    return {"K": list(sp.K), "S": list(sp.S)}


# -- subcommands ----------------------------------------------------------------


def _cmd_recognize(args, g):
    sp = recognize_split(g)
    if sp is None:
        return EXIT_NEGATIVE, {"split": False} if args.json else "not split"
    if args.json:
        return EXIT_OK, {"split": True, **_partition(sp)}
    return EXIT_OK, f"split K={list(sp.K)} S={list(sp.S)}"


def _cmd_partitions(args, g):
    sp = _split_of(g, args.clique)
    return EXIT_OK, swing_report(sp).as_dict()


def _cmd_nullity(args, g):
    sp = _split_of(g, args.clique)
    rep = nullity(sp)
    return EXIT_OK, {**rep.as_dict(), "partition": _partition(sp)}


def _cmd_kernel(args, g):
    sp = _split_of(g, args.clique)
    kb = structured_kernel_basis(sp)
    return EXIT_OK, {
        "partition": _partition(sp),
        "order": list(kb.order),
        "nullity": kb.nullity,
        "rank": kb.rank,
        "rank_R": kb.rank_R,
        "pivot_vertices": list(kb.pivot_vertices),
        "free_vertices": list(kb.free_vertices),
        "z": None if kb.z is None else _fr(kb.z),
        "y0": None if kb.y0 is None else _fr(kb.y0),
        "vectors": [
            {"kind": kind, "vertex": v, "entries": _fr(vec)}
            for (kind, v), vec in zip(kb.structure, kb.vectors.vectors)
        ],
    }


def _cmd_support(args, g):
    sp = _split_of(g, args.clique)
    return EXIT_OK, {**support_location_predicates(sp).as_dict(), "partition": _partition(sp)}


def _cmd_det(args, g):
    sp = _split_of(g, args.clique)
    formula = det_split_schur(sp)
    oracle = det_bareiss(adjacency_matrix(g))
    return EXIT_OK, {"formula": format_rational(formula), "oracle": format_rational(oracle),
                     "agree": formula == oracle}


def _cmd_compose(args, _g):
    left = read_graph(_read_text(args.left), args.format)
    right = read_graph(_read_text(args.right), args.format)
    sp = _split_of(left, args.clique)
    right_sp = recognize_split(right)
    if right_sp is not None:
        composite = compose_split(sp, right_sp)
        h = composite.graph
        part = _partition(composite)
    else:
        h = tyshkevich_compose(sp, right)
        part = None
    emb = embedded_kernel_vectors(sp, right)
    return EXIT_OK, {
        "graph6": write_graph6(h),
        "n": h.n,
        "edges": h.num_edges,
        "partition": part,
        "order": list(sp.order) + list(range(sp.n, sp.n + right.n)),
        "embedded_kernel_vectors": [_fr(v) for v in emb.vectors],
    }


def _cmd_census(args, _g):
    from .harness.census import census_verify

    report = census_verify(args.n_max, args.random, args.seed, compose_pairs=args.compose,
                           square_max_k=args.square, workers=args.workers,
                           allow_large=args.allow_large)
    return (EXIT_OK if report.ok else EXIT_NEGATIVE), report.as_dict()


def _cmd_verify(args, g):
    from .harness.census import verify_graph

    report = verify_graph(g)
    return (EXIT_OK if report.ok else EXIT_NEGATIVE), report.as_dict()


_COMMANDS = {
    "recognize": (_cmd_recognize, "decide whether the graph is split"),
    "partitions": (_cmd_partitions, "list all s-partitions and the swing structure"),
    "nullity": (_cmd_nullity, "nullity, nul(R) and the clique-kernel"),
    "kernel": (_cmd_kernel, "structured kernel basis"),
    "support": (_cmd_support, "support and the sufficient conditions on its location"),
    "det": (_cmd_det, "determinant by the split formula and by elimination"),
    "compose": (_cmd_compose, "Tyshkevich composition of two graphs"),
    "census": (_cmd_census, "check the theorem catalogue over many graphs"),
    "verify": (_cmd_verify, "check the theorem catalogue on one graph"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (always on for reports)")
    common.add_argument("--quiet", action="store_true", help="print nothing; report through the exit code")

    graph_in = _Parser(add_help=False)
    graph_in.add_argument("--input", default="-", help="graph file, or - for standard input")
    graph_in.add_argument("--format", choices=("auto", "graph6", "edges"), default="auto")
    graph_in.add_argument("--clique", help="comma-separated clique side to use instead of the recognised one")

    parser = _Parser(prog="splitnull", description="Exact nullspace analysis of split graphs.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (_, helptext) in _COMMANDS.items():
        if name == "census":
            p = sub.add_parser(name, help=helptext, parents=[common])
            p.add_argument("--n-max", type=int, default=5)
            p.add_argument("--random", type=int, default=0, help="random split graphs to check")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--compose", type=int, default=0, help="random composition pairs to check")
            p.add_argument("--square", type=int, default=0,
                           help="check all square composition pairs with |K| = |S| up to this size")
            p.add_argument("--workers", type=int, default=1)
            p.add_argument("--allow-large", action="store_true", help="permit n-max = 8")
        elif name == "compose":
            p = sub.add_parser(name, help=helptext, parents=[common])
            p.add_argument("--left", required=True)
            p.add_argument("--right", required=True)
            p.add_argument("--format", choices=("auto", "graph6", "edges"), default="auto")
            p.add_argument("--clique", help="clique side of the left factor")
        else:
            sub.add_parser(name, help=helptext, parents=[common, graph_in])
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler = _COMMANDS[args.command][0]
    try:
        g = None
        if args.command not in ("census", "compose"):
            g = read_graph(_read_text(args.input), args.format)
        code, payload = handler(args, g)
    except (GraphFormatError, _UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # DomainError and out-of-range parameters alike
        print(f"domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if not args.quiet:
        if isinstance(payload, str):
            print(payload, file=stdout)
        else:
            print(json.dumps(payload, sort_keys=True), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
