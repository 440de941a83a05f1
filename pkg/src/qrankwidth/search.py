"""Finding branch decompositions of small f-width."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cutrank import CutFunction
from .decomposition import BranchDecomposition, Nested, f_width, from_nested
from .graph import Graph, bits

__all__ = [
    "SearchResult",
    "DEFAULT_EXACT_CAP",
    "exact_optimal_decomposition",
    "greedy_decomposition",
    "decompose",
]

DEFAULT_EXACT_CAP = 13


@dataclass(frozen=True)
class SearchResult:
    decomposition: BranchDecomposition
    width: int
    method: str
    optimal: bool


class _Memo:
    def __init__(self, graph: Graph, f: CutFunction):
        self.graph = graph
        self.f = f
        self.values: dict[int, int] = {}

    def __call__(self, mask: int) -> int:
        value = self.values.get(mask)
        if value is None:
            value = self.values[mask] = self.f(self.graph, mask)
        return value


def _trivial(graph: Graph, f: CutFunction, method: str) -> SearchResult:
    dec = from_nested(0 if graph.n == 1 else ())
    return SearchResult(dec, f(graph, 0), method, True)


def exact_optimal_decomposition(graph: Graph, f: CutFunction, cap: int = DEFAULT_EXACT_CAP) -> SearchResult:
    """Minimum f-width decomposition by dynamic programming over vertex subsets.

    ``best[A]`` is the smallest possible maximum of f over the edges of a
    subtree whose leaves are exactly A, including the edge above it:
    ``best[A] = max(f(A), min over splits A = B + C of max(best[B], best[C]))``.
    Splits are enumerated as submasks, so the work is about 3**n.
    """
    n = graph.n
    if n < 2:
        raise ValueError("exact search needs at least 2 vertices")
    if n > cap:
        raise ValueError(f"exact search is capped at {cap} vertices (graph has {n})")
    f_of = _Memo(graph, f)
    full = graph.full
    best = [0] * (full + 1)
    split = [0] * (full + 1)
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            best[mask] = f_of(mask)
            continue
        floor = f_of(mask) if mask != full else 0
        low = mask & -mask
        rest = mask ^ low
        value = math.inf
        choice = 0
        sub = rest
        # B always contains the lowest vertex, so each split is seen once
        while True:
            sub = (sub - 1) & rest
            b = low | sub
            c = mask ^ b
            v = best[b] if best[b] > best[c] else best[c]
            if v < value:
                value, choice = v, b
                if value <= floor:
                    break
            if sub == 0:
                break
        best[mask] = max(floor, value)
        split[mask] = choice

    def build(mask: int) -> Nested:
        if mask & (mask - 1) == 0:
            return mask.bit_length() - 1
        b = split[mask]
        return (build(b), build(mask ^ b))

    dec = from_nested(build(full))
    return SearchResult(dec, best[full], "exact", True)


def _bisect(side: int, f_of: _Memo, rng: random.Random) -> int:
    verts = list(bits(side))
    k = len(verts)
    if k == 2:
        return 1 << verts[0]
    floor = max(1, k // 3)
    rng.shuffle(verts)
    part = 0
    for v in verts[: k // 2]:
        part |= 1 << v

    def cost(b: int) -> tuple[int, int]:
        x, y = f_of(b), f_of(side ^ b)
        return (max(x, y), x + y)

    current = cost(part)
    while True:
        inside = list(bits(part))
        outside = list(bits(side ^ part))
        candidates = []
        if len(inside) > floor:
            candidates += [part & ~(1 << u) for u in inside]
        if len(outside) > floor:
            candidates += [part | (1 << v) for v in outside]
        candidates += [(part & ~(1 << u)) | (1 << v) for u in inside for v in outside]
        best = min(candidates, key=cost, default=None)
        if best is None or cost(best) >= current:
            return part
        part, current = best, cost(best)


def greedy_decomposition(graph: Graph, f: CutFunction, seed: int = 0) -> SearchResult:
    """Recursive bisection with local search; no optimality guarantee.

    Each level starts from a random balanced split and applies the best
    single-vertex move or swap while it lowers the larger of the two cut
    values (then their sum), keeping about a third of the vertices on each
    side. Deterministic for a fixed ``seed``.
    """
    if graph.n < 2:
        return _trivial(graph, f, "greedy")
    rng = random.Random(seed)
    f_of = _Memo(graph, f)

    def build(side: int) -> Nested:
        if side & (side - 1) == 0:
            return side.bit_length() - 1
        part = _bisect(side, f_of, rng)
        return (build(part), build(side ^ part))

    dec = from_nested(build(graph.full))
    return SearchResult(dec, f_width(graph, dec, lambda g, m: f_of(m)), "greedy", False)


def decompose(graph: Graph, f: CutFunction, method: str = "auto", seed: int = 0,
              cap: int = DEFAULT_EXACT_CAP) -> SearchResult:
    """Exact search when ``n <= cap`` (or ``method='exact'``), otherwise greedy."""
    if graph.n < 2:
        return _trivial(graph, f, "exact" if method != "greedy" else "greedy")
    if method == "exact" or (method == "auto" and graph.n <= cap):
        return exact_optimal_decomposition(graph, f, cap)
    if method in ("greedy", "auto"):
        return greedy_decomposition(graph, f, seed)
    raise ValueError(f"unknown method {method!r}")
