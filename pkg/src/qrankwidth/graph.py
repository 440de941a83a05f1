"""Simple undirected graphs stored as adjacency bit-rows.

Vertex sets throughout the package are plain ``int`` bitmasks: bit ``v`` is set
iff vertex ``v`` belongs to the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphParseError",
    "SplitMix64",
    "bits",
    "to_mask",
    "parse_graph",
    "read_graph",
    "format_edge_list",
    "generate_family",
    "bipartite_adjacency",
]


class GraphParseError(ValueError):
    """Raised for malformed graph text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def neighborhood(self, vertices: Iterable[int] | int) -> int:
        """N(S): vertices adjacent to some member of S, minus S itself."""
        mask = to_mask(vertices)
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out & ~mask

    def complement_of(self, vertices: Iterable[int] | int) -> int:
        return self.full & ~to_mask(vertices)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(lineno, f"expected an integer, got {token!r}") from None


def _build(n: int, edges: list[tuple[int, int, int]]) -> Graph:
    adj = [0] * n
    for lineno, u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphParseError(lineno, f"vertex {x} out of range for n={n}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _parse_edge_list(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise GraphParseError(1, "missing 'n m' header")
    lineno, header = lines[0]
    if len(header) != 2:
        raise GraphParseError(lineno, "header must be 'n m'")
    n, m = (_parse_int(t, lineno) for t in header)
    if n < 0 or m < 0:
        raise GraphParseError(lineno, "negative count in header")
    body = lines[1:]
    if len(body) != m:
        lineno = body[-1][0] if body else lineno
        raise GraphParseError(lineno, f"header declares {m} edges, found {len(body)}")
    edges = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise GraphParseError(lineno, "edge line must be 'u v'")
        edges.append((lineno, _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)))
    return _build(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate 'p' line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphParseError(lineno, "expected 'p edge n m'")
            n = _parse_int(tokens[2], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphParseError(lineno, "edge before 'p' line")
            if len(tokens) != 3:
                raise GraphParseError(lineno, "expected 'e u v'")
            u, v = (_parse_int(t, lineno) - 1 for t in tokens[1:])
            edges.append((lineno, u, v))
        else:
            raise GraphParseError(lineno, f"unknown line type {tokens[0]!r}")
    if n is None:
        raise GraphParseError(1, "missing 'p edge n m' line")
    return _build(n, edges)


def parse_graph(text: str, format: str = "auto") -> Graph:
    """Parse an edge-list (0-based, ``n m`` header) or DIMACS (1-based) graph.

    Parallel edges are merged; self-loops and out-of-range ids raise
    :class:`GraphParseError`.
    """
    if format == "auto":
        first = next((t for _, t in _data_lines(text)), None)
        format = "dimacs" if first and first[0] in ("p", "c", "e") else "edge-list"
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph(path, format: str = "auto") -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read(), format)


def format_edge_list(graph: Graph) -> str:
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014).

    state <- state + 0x9E3779B97F4A7C15 (mod 2**64), then
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9,
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB, output z ^ (z >> 31).
    ``random()`` is the top 53 bits divided by 2**53.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next() >> 11) / float(1 << 53)

    def below(self, bound: int) -> int:
        return self.next() % bound


def generate_family(family: str, seed: int = 0, **params) -> Graph:
    """Build a graph from a named family.

    Families and parameters:

    * ``path``, ``cycle``, ``complete``, ``empty``, ``star``: ``n``
      (``star`` has centre 0)
    * ``grid``: ``rows``, ``cols``; vertex ``r * cols + c``
    * ``complete_bipartite``: ``a``, ``b``; sides ``0..a-1`` and ``a..a+b-1``
    * ``random_tree``: ``n``; vertex ``v >= 1`` attaches to
      ``SplitMix64(seed).below(v)``, drawn in order ``v = 1..n-1``
    * ``gnp``: ``n``, ``p``; pairs ``(u, v)``, ``u < v``, are visited in
      lexicographic order and kept iff ``SplitMix64(seed).random() < p``

    The two random families are reproducible bit-for-bit from ``seed``.
    """
    def need(name, lo=1):
        if name not in params:
            raise ValueError(f"family {family!r} needs parameter {name!r}")
        value = params[name]
        if not isinstance(value, int) or value < lo:
            raise ValueError(f"parameter {name!r} must be an integer >= {lo}")
        return value

    if family == "path":
        n = need("n")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        n = need("n", 3)
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        n = need("n")
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if family == "empty":
        return Graph.from_edges(need("n", 0), [])
    if family == "star":
        n = need("n")
        return Graph.from_edges(n, [(0, v) for v in range(1, n)])
    if family == "complete_bipartite":
        a, b = need("a"), need("b")
        return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    if family == "grid":
        rows, cols = need("rows"), need("cols")
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return Graph.from_edges(rows * cols, edges)
    if family == "random_tree":
        n = need("n")
        rng = SplitMix64(seed)
        return Graph.from_edges(n, [(rng.below(v), v) for v in range(1, n)])
    if family == "gnp":
        n = need("n")
        p = params.get("p")
        if p is None or not 0.0 <= p <= 1.0:
            raise ValueError("gnp needs 0 <= p <= 1")
        rng = SplitMix64(seed)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown family {family!r}")


def bipartite_adjacency(graph: Graph, side: Iterable[int] | int):
    """The 0-1 matrix of the cut (A, V - A).

    Rows follow A in ascending vertex order, columns follow V - A ascending.
    """
    from .cutrank import ZeroOneMatrix

    a = to_mask(side)
    cols = list(bits(graph.full & ~a))
    rows = []
    for v in bits(a):
        adj = graph.adj[v]
        row = 0
        for j, u in enumerate(cols):
            if (adj >> u) & 1:
                row |= 1 << j
        rows.append(row)
    return ZeroOneMatrix(tuple(rows), len(cols))
