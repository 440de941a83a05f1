"""Brute-force reference answers.

Nothing here goes through the class tables, capped counts or search code that
the rest of the package uses; sets are plain Python sets.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .cutrank import CutFunction
from .decomposition import BranchDecomposition
from .graph import Graph
from .problems import IntSet, ProblemSpec

__all__ = [
    "OracleTooLarge",
    "brute_sigma_rho",
    "brute_dq",
    "brute_nec_classes",
    "all_decompositions",
    "brute_width",
]


class OracleTooLarge(ValueError):
    pass


def _neighbour_lists(graph: Graph) -> list[set[int]]:
    return [{u for u in range(graph.n) if (graph.adj[v] >> u) & 1} for v in range(graph.n)]


def _allowed(count: int, s: IntSet) -> bool:
    if s.cofinite:
        return count not in s.elements
    return count in s.elements


def _labels_ok(nbrs: list[set[int]], spec: ProblemSpec, label: Iterable[int]) -> bool:
    label = list(label)
    q = spec.q
    for v, i in enumerate(label):
        counts = [0] * q
        for u in nbrs[v]:
            counts[label[u]] += 1
        for j in range(q):
            if not _allowed(counts[j], spec.matrix[i][j]):
                return False
    return True


def brute_sigma_rho(graph: Graph, spec: ProblemSpec, max_n: int = 20) -> tuple[int, frozenset[int]] | None:
    """Best [sigma, rho]-set by scanning all 2**n subsets; ``None`` if none exists.

    Returns ``(size, set)``. For the ``feas`` objective the smallest set is
    returned.
    """
    n = graph.n
    if n > max_n:
        raise OracleTooLarge(f"brute_sigma_rho limited to n <= {max_n}")
    nbrs = _neighbour_lists(graph)
    sigma, rho = spec.matrix[0][0], spec.matrix[1][0]
    best = None
    for size in range(n + 1):
        for members in itertools.combinations(range(n), size):
            s = set(members)
            ok = all(
                _allowed(len(nbrs[v] & s), sigma if v in s else rho)
                for v in range(n)
            )
            if ok:
                if spec.objective != "max":
                    return size, frozenset(s)
                best = (size, frozenset(s))
                break
    return best


def brute_dq(graph: Graph, spec: ProblemSpec, max_states: int = 10 ** 7) -> tuple[int, list[set[int]]] | None:
    """Scan all q**n labelings; return ``(|part 0|, parts)`` or ``None``.

    Honours the objective on the size of part 0 (``feas`` returns the first
    labeling found in lexicographic order).
    """
    n, q = graph.n, spec.q
    if q ** n > max_states:
        raise OracleTooLarge(f"brute_dq limited to q**n <= {max_states}")
    nbrs = _neighbour_lists(graph)
    best = None
    for label in itertools.product(range(q), repeat=n):
        if not _labels_ok(nbrs, spec, label):
            continue
        size = label.count(0)
        if (best is None or (spec.objective == "min" and size < best[0])
                or (spec.objective == "max" and size > best[0])):
            best = (size, [{v for v in range(n) if label[v] == i} for i in range(q)])
            if spec.objective == "feas":
                break
    return best


def brute_nec_classes(graph: Graph, side: Iterable[int], d: int, max_size: int = 14) -> int:
    """Count d-neighbour classes over ``side`` by bucketing all its subsets."""
    a = sorted(set(side))
    if len(a) > max_size:
        raise OracleTooLarge(f"brute_nec_classes limited to |A| <= {max_size}")
    nbrs = _neighbour_lists(graph)
    outside = [v for v in range(graph.n) if v not in set(a)]
    buckets = set()
    for size in range(len(a) + 1):
        for members in itertools.combinations(a, size):
            x = set(members)
            buckets.add(tuple(min(d, len(nbrs[v] & x)) for v in outside))
    return len(buckets)


def all_decompositions(n: int) -> Iterator[BranchDecomposition]:
    """Every branch decomposition with leaves 0..n-1, up to relabelling inner nodes.

    Built by inserting leaf ``k`` on every edge of every tree for the first
    ``k`` leaves, giving (2n - 5)!! trees for n >= 3.
    """
    if n <= 0:
        yield BranchDecomposition((), {})
        return
    if n == 1:
        yield BranchDecomposition(((),), {0: 0})
        return

    def grow(edges: list[tuple[int, int]], nodes: int, k: int):
        if k == n:
            yield edges, nodes
            return
        for idx, (u, v) in enumerate(edges):
            mid, leaf = nodes, nodes + 1
            rest = edges[:idx] + edges[idx + 1:]
            yield from grow(rest + [(u, mid), (mid, v), (mid, leaf)], nodes + 2, k + 1)

    # nodes 0 and 1 are the leaves of vertices 0 and 1
    for edges, nodes in grow([(0, 1)], 2, 2):
        adj = [[] for _ in range(nodes)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        # leaf of vertex k (k >= 2) is node 2k - 1
        leaf_vertex = {0: 0, 1: 1}
        leaf_vertex.update({2 * k - 1: k for k in range(2, n)})
        yield BranchDecomposition(tuple(tuple(a) for a in adj), leaf_vertex)


def _cuts_by_search(dec: BranchDecomposition) -> list[set[int]]:
    cuts = []
    for u, v in dec.edges:
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in dec.tree[x]:
                if y not in seen and not (x == v and y == u):
                    seen.add(y)
                    stack.append(y)
        cuts.append({dec.leaf_vertex[x] for x in seen if x in dec.leaf_vertex})
    return cuts


def brute_width(graph: Graph, f: CutFunction) -> int:
    """Minimum f-width over every decomposition, found by enumeration."""
    if graph.n <= 1:
        return f(graph, 0)
    best = None
    for dec in all_decompositions(graph.n):
        width = max(f(graph, sum(1 << x for x in cut)) for cut in _cuts_by_search(dec))
        if best is None or width < best:
            best = width
    return best
