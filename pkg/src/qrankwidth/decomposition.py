"""Branch decompositions: subcubic trees whose leaves are the graph's vertices."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence, Union

from .cutrank import CutFunction
from .graph import Graph

__all__ = [
    "BranchDecomposition",
    "RootedDecomposition",
    "DecompositionParseError",
    "Nested",
    "from_nested",
    "caterpillar",
    "validate",
    "enumerate_cuts",
    "f_width",
    "root_at_edge",
    "parse_decomposition",
    "serialize_decomposition",
]

# A rooted binary tree written as nested tuples of vertex ids, e.g. ((0, 1), (2, 3)).
Nested = Union[int, tuple]


class DecompositionParseError(ValueError):
    pass


@dataclass(frozen=True)
class BranchDecomposition:
    """Tree adjacency lists plus the leaf -> vertex map.

    Node ids are ``0..len(tree)-1``. Edges are numbered by their position in
    :attr:`edges`, which lists each tree edge once as ``(u, v)`` with ``u < v``.
    """

    tree: tuple[tuple[int, ...], ...]
    leaf_vertex: dict[int, int]
    edges: tuple[tuple[int, int], ...] = field(init=False)
    vertex_leaf: dict[int, int] = field(init=False)

    def __post_init__(self):
        edges = sorted({(min(u, v), max(u, v)) for u, nbrs in enumerate(self.tree) for v in nbrs})
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "vertex_leaf", {v: node for node, v in self.leaf_vertex.items()})

    @property
    def n(self) -> int:
        return len(self.leaf_vertex)

    def leaves(self) -> list[int]:
        return [u for u, nbrs in enumerate(self.tree) if len(nbrs) <= 1]


def from_nested(nested: Nested) -> BranchDecomposition:
    """Build a decomposition from a rooted binary tree of nested tuples.

    Single-child groups are suppressed. The root may have two or three
    children; a two-child root is suppressed so that every internal node of
    the result has degree exactly three.
    """
    adj: list[list[int]] = []
    leaf_vertex: dict[int, int] = {}

    def new_node() -> int:
        adj.append([])
        return len(adj) - 1

    def link(u: int, v: int) -> None:
        adj[u].append(v)
        adj[v].append(u)

    def strip(t: Nested) -> Nested:
        while isinstance(t, tuple) and len(t) == 1:
            t = t[0]
        return t

    def build(t: Nested) -> int:
        t = strip(t)
        if isinstance(t, int):
            if t in leaf_vertex.values():
                raise DecompositionParseError(f"repeated vertex id {t}")
            node = new_node()
            leaf_vertex[node] = t
            return node
        if len(t) != 2:
            raise DecompositionParseError(f"inner group with {len(t)} children; at most 2 allowed below the root")
        node = new_node()
        for child in t:
            link(node, build(child))
        return node

    root = strip(nested)
    if isinstance(root, int):
        build(root)
    elif len(root) == 2:
        link(build(root[0]), build(root[1]))
    elif len(root) == 3:
        node = new_node()
        for child in root:
            link(node, build(child))
    elif len(root) == 0:
        pass
    else:
        raise DecompositionParseError(f"root group with {len(root)} children; at most 3 allowed")
    return BranchDecomposition(tuple(tuple(a) for a in adj), leaf_vertex)


def caterpillar(vertices: Sequence[int]) -> BranchDecomposition:
    """Linear decomposition: vertices hang off a path in the given order."""
    vertices = list(vertices)
    if not vertices:
        return from_nested(())
    nested: Nested = vertices[0]
    for v in vertices[1:]:
        nested = (nested, v)
    return from_nested(nested)


def validate(dec: BranchDecomposition, graph: Graph | None = None) -> list[str]:
    """Return the list of violated conditions (empty when valid).

    Violation messages start with one of ``tree``, ``degree``, ``leaf`` or
    ``bijection``.
    """
    problems = []
    nodes = len(dec.tree)
    for u, nbrs in enumerate(dec.tree):
        if u in nbrs or len(set(nbrs)) != len(nbrs) or any(not 0 <= v < nodes for v in nbrs):
            problems.append(f"tree: bad adjacency at node {u}")
        elif any(u not in dec.tree[v] for v in nbrs):
            problems.append(f"tree: asymmetric adjacency at node {u}")
    if problems:
        return problems
    if nodes and len(dec.edges) != nodes - 1:
        problems.append(f"tree: {nodes} nodes but {len(dec.edges)} edges")
    if nodes:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in dec.tree[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != nodes:
            problems.append("tree: not connected")

    n_leaves = len(dec.leaves())
    for u, nbrs in enumerate(dec.tree):
        deg = len(nbrs)
        if deg > 3:
            problems.append(f"degree: node {u} has degree {deg}")
        elif n_leaves >= 3 and deg == 2:
            problems.append(f"degree: internal node {u} has degree 2")

    leaves = set(dec.leaves())
    for node in dec.leaf_vertex:
        if node not in leaves:
            problems.append(f"leaf: node {node} is mapped but not a leaf")
    for node in leaves:
        if node not in dec.leaf_vertex:
            problems.append(f"leaf: leaf {node} is not mapped to a vertex")
    images = list(dec.leaf_vertex.values())
    if len(set(images)) != len(images):
        problems.append("bijection: two leaves map to the same vertex")
    if graph is not None and set(images) != set(range(graph.n)):
        problems.append(f"bijection: leaves do not map onto the {graph.n} vertices")
    return problems


def _side_masks(dec: BranchDecomposition) -> dict[tuple[int, int], int]:
    """For every edge, the vertex mask on the side away from vertex 0's leaf."""
    if not dec.edges:
        return {}
    ref = dec.vertex_leaf.get(0, next(iter(dec.leaf_vertex)))
    parent = {ref: -1}
    order = [ref]
    for u in order:
        for v in dec.tree[u]:
            if v not in parent:
                parent[v] = u
                order.append(v)
    mask = {u: 1 << dec.leaf_vertex[u] if u in dec.leaf_vertex else 0 for u in order}
    for u in reversed(order[1:]):
        mask[parent[u]] |= mask[u]
    return {(min(u, parent[u]), max(u, parent[u])): mask[u] for u in order[1:]}


def enumerate_cuts(dec: BranchDecomposition) -> list[int]:
    """One vertex mask per tree edge, in :attr:`BranchDecomposition.edges` order.

    Each mask is the side of the cut that does not contain vertex 0.
    """
    sides = _side_masks(dec)
    return [sides[e] for e in dec.edges]


def f_width(graph: Graph, dec: BranchDecomposition, f: CutFunction) -> int:
    cuts = enumerate_cuts(dec)
    if not cuts:
        return f(graph, 0)
    return max(f(graph, side) for side in cuts)


@dataclass
class RootedDecomposition:
    """Binary tree obtained by subdividing one decomposition edge.

    ``vertices[w]`` is the mask of graph vertices at leaves below ``w``;
    ``leaf_vertex[w]`` is the vertex of leaf ``w`` or ``None`` for inner nodes.
    """

    root: int
    children: list[tuple[int, ...]]
    vertices: list[int]
    leaf_vertex: list[int | None]

    def postorder(self) -> list[int]:
        out = []
        stack = [(self.root, False)]
        while stack:
            w, done = stack.pop()
            if done:
                out.append(w)
                continue
            stack.append((w, True))
            for c in reversed(self.children[w]):
                stack.append((c, False))
        return out


def root_at_edge(dec: BranchDecomposition, edge: int | None = 0) -> RootedDecomposition:
    """Subdivide tree edge number ``edge`` and hang the tree from the new node.

    A decomposition without edges (at most one vertex) is returned rooted at
    its single leaf; ``edge`` is then ignored.
    """
    children: list[tuple[int, ...]] = []
    vertices: list[int] = []
    leaf_vertex: list[int | None] = []

    if not dec.edges:
        if not dec.tree:
            return RootedDecomposition(0, [()], [0], [None])
        (v,) = dec.leaf_vertex.values()
        return RootedDecomposition(0, [()], [1 << v], [v])
    if edge is None or not 0 <= edge < len(dec.edges):
        raise IndexError(f"no tree edge {edge}")

    def grow(node: int, came_from: int) -> int:
        ident = len(children)
        children.append(())
        vertices.append(0)
        leaf_vertex.append(dec.leaf_vertex.get(node))
        kids = tuple(grow(nb, node) for nb in dec.tree[node] if nb != came_from)
        children[ident] = kids
        if not kids:
            vertices[ident] = 1 << dec.leaf_vertex[node]
        else:
            vertices[ident] = vertices[kids[0]] | vertices[kids[1]]
        return ident

    u, v = dec.edges[edge]
    children.append(())
    vertices.append(0)
    leaf_vertex.append(None)
    a, b = grow(u, v), grow(v, u)
    children[0] = (a, b)
    vertices[0] = vertices[a] | vertices[b]
    return RootedDecomposition(0, children, vertices, leaf_vertex)


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_decomposition(text: str, n: int | None = None) -> BranchDecomposition:
    """Parse the nested-pair text format, e.g. ``((0,1),(2,3))``.

    When ``n`` is given the ids must be exactly ``0..n-1``.
    """
    tokens = []
    for m in _TOKEN.finditer(text.strip()):
        if m.group(1) is not None:
            tokens.append(int(m.group(1)))
        elif m.group(2) in "(),":
            tokens.append(m.group(2))
        else:
            raise DecompositionParseError(f"unexpected character {m.group(2)!r}")
    pos = 0

    def expect(tok) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise DecompositionParseError(f"expected {tok!r}, got {got!r}")
        pos += 1

    def item() -> Nested:
        nonlocal pos
        if pos >= len(tokens):
            raise DecompositionParseError("unexpected end of input")
        tok = tokens[pos]
        if isinstance(tok, int):
            pos += 1
            return tok
        expect("(")
        parts = [item()]
        while pos < len(tokens) and tokens[pos] == ",":
            pos += 1
            parts.append(item())
        expect(")")
        return tuple(parts)

    if not tokens:
        raise DecompositionParseError("empty decomposition")
    nested = item()
    if pos != len(tokens):
        raise DecompositionParseError(f"trailing input at token {tokens[pos]!r}")
    dec = from_nested(nested)
    if n is not None:
        ids = set(dec.leaf_vertex.values())
        unknown = sorted(v for v in ids if v >= n)
        if unknown:
            raise DecompositionParseError(f"unknown vertex id {unknown[0]} for n={n}")
        if len(ids) != n:
            missing = min(set(range(n)) - ids)
            raise DecompositionParseError(f"vertex {missing} missing from decomposition")
    return dec


def serialize_decomposition(dec: BranchDecomposition) -> str:
    """Write ``dec`` in nested-pair form, rooted at the edge of vertex 0's leaf."""
    if not dec.edges:
        return str(next(iter(dec.leaf_vertex.values()))) if dec.leaf_vertex else "()"

    def low(node: int, came_from: int) -> int:
        if node in dec.leaf_vertex:
            return dec.leaf_vertex[node]
        return min(low(nb, node) for nb in dec.tree[node] if nb != came_from)

    def write(node: int, came_from: int) -> str:
        if node in dec.leaf_vertex:
            return str(dec.leaf_vertex[node])
        kids = sorted((nb for nb in dec.tree[node] if nb != came_from), key=lambda k: low(k, node))
        return "(" + ",".join(write(k, node) for k in kids) + ")"

    start = dec.vertex_leaf[min(dec.vertex_leaf)]
    (other,) = dec.tree[start]
    return f"({write(start, other)},{write(other, start)})"
