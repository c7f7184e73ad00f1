"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one integer bitmask per vertex, which keeps the
exhaustive census loops cheap.  Graphs are immutable.
"""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, Sequence

from .errors import GraphFormatError
from .linalg import QMatrix

VertexSet = FrozenSet[int]

__all__ = [
    "Graph",
    "VertexSet",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "adjacency_matrix",
    "complement",
    "induced_subgraph",
    "delete_vertex",
    "are_twins",
    "twin_classes",
    "is_clique",
    "is_independent",
    "is_connected",
    "isolated_vertices",
    "is_threshold",
    "mask_of",
    "members",
]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        for v, m in enumerate(masks):
            if m >> n or m >> v & 1:
                raise ValueError(f"bad neighbour mask for vertex {v}")
            for u in members(m):
                if not masks[u] >> v & 1:
                    raise ValueError("adjacency is not symmetric")
        return cls._wrap(tuple(masks))

    @classmethod
    def _wrap(cls, masks: tuple) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g.adj = masks
        return g

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return frozenset(members(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(m).count("1") for m in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- graph6 ----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph) -> str:
    """graph6 encoding (no header, no newline)."""
    n = g.n
    adj = g.adj
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            acc = acc << 1 | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 8-byte graph6 header")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = n << 6 | x
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 4-byte graph6 header")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = n << 6 | x
    nbits = n * (n - 1) // 2
    data = vals[pos:]
    if len(data) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(data)}"
        )
    adj = [0] * n
    k = 0
    j, i = 1, 0
    for byte in data:
        for shift in range(5, -1, -1):
            bit = byte >> shift & 1
            if k >= nbits:
                if bit:
                    raise GraphFormatError("nonzero padding bits")
                continue
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph._wrap(tuple(adj))


# -- edge lists ------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by one ``u v`` pair per line; ``#`` starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise GraphFormatError("edge list is empty")
    lineno, head = lines[0]
    if len(head) != 1:
        raise GraphFormatError(f"line {lineno}: expected a single vertex count")
    n = _parse_int(head[0], lineno)
    if n < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex count")
    edges = set()
    for lineno, toks in lines[1:]:
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u, v = (_parse_int(t, lineno) for t in toks)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: non-integer token {tok!r}") from None


def write_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# -- derived graphs and matrices --------------------------------------------


@lru_cache(maxsize=1 << 16)
def _row_bits(mask: int, n: int) -> tuple:
    return tuple(mask >> v & 1 for v in range(n))


def adjacency_matrix(g: Graph, order: Sequence[int] | None = None) -> QMatrix:
    """0/1 adjacency matrix with row/column ``i`` standing for ``order[i]``."""
    if order is None:
        return QMatrix._wrap(tuple(_row_bits(m, g.n) for m in g.adj), g.n, g.n)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    adj = g.adj
    rows = tuple(tuple(adj[u] >> v & 1 for v in order) for u in order)
    return QMatrix._wrap(rows, g.n, g.n)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._wrap(tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph on ``keep``, relabelled ``0..len(keep)-1`` in sorted order."""
    keep = sorted(set(keep))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    masks = []
    for v in keep:
        m = 0
        for u in members(g.adj[v]):
            if u in pos:
                m |= 1 << pos[u]
        masks.append(m)
    return Graph._wrap(tuple(masks))


def delete_vertex(g: Graph, v: int) -> Graph:
    """``G - v`` with the vertices above ``v`` shifted down by one."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    low = (1 << v) - 1
    return Graph._wrap(
        tuple((m & low) | (m >> 1 & ~low) for u, m in enumerate(g.adj) if u != v)
    )


def are_twins(g: Graph, u: int, v: int) -> bool:
    """``N(u) - v == N(v) - u``."""
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    m = mask_of(vs)
    return all((g.adj[v] | 1 << v) & m == m for v in members(m))


def is_independent(g: Graph, vs: Iterable[int]) -> bool:
    m = mask_of(vs)
    return all(not g.adj[v] & m for v in members(m))


def twin_classes(g: Graph) -> list[VertexSet]:
    """Classes of the twin relation, ordered by smallest member."""
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            if are_twins(g, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    for cls in classes:
        if len(cls) > 1 and not (is_clique(g, cls) or is_independent(g, cls)):
            raise AssertionError(f"twin class {cls} is neither a clique nor independent")
    return [frozenset(c) for c in classes]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def isolated_vertices(g: Graph) -> VertexSet:
    return frozenset(v for v in range(g.n) if not g.adj[v])


def is_threshold(g: Graph) -> bool:
    """Peel isolated or dominating vertices until nothing is left."""
    alive = (1 << g.n) - 1
    while alive:
        for v in members(alive):
            nb = g.adj[v] & alive
            if nb == 0 or nb == alive & ~(1 << v):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)
