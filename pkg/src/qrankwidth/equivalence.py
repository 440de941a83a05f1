"""d-neighbour equivalence over a cut (A, V - A).

Two subsets X, Y of A are equivalent when every vertex outside A sees the
same number of neighbours in X as in Y, counting only up to ``d``. The class
of X is identified by its *signature*: the vector of those capped counts over
V - A in ascending vertex order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .decomposition import BranchDecomposition, enumerate_cuts
from .graph import Graph, bits, to_mask
from .problems import IntSet

__all__ = [
    "NecClassTable",
    "signature_d",
    "enumerate_classes",
    "nec_count",
    "necd_width",
    "nec_bound",
    "reduce_representative",
    "member_capped",
]

Signature = tuple[int, ...]


def _outside_rows(graph: Graph, side: int) -> list[int]:
    return [graph.adj[u] & side for u in bits(graph.full & ~side)]


def _signature(rows: Sequence[int], x: int, d: int) -> Signature:
    return tuple(min(d, (row & x).bit_count()) for row in rows)


def signature_d(graph: Graph, side: Iterable[int] | int, subset: Iterable[int] | int, d: int) -> Signature:
    a, x = to_mask(side), to_mask(subset)
    if x & ~a:
        raise ValueError("subset is not contained in the cut side")
    if d < 1:
        raise ValueError("d must be positive")
    return _signature(_outside_rows(graph, a), x, d)


@dataclass
class NecClassTable:
    """All classes of the d-neighbour equivalence over one cut side."""

    side: int
    d: int
    rows: list[int]
    reps: list[int] = field(default_factory=list)
    index: dict[Signature, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.reps)

    def signature(self, subset: int) -> Signature:
        return _signature(self.rows, subset, self.d)

    def classify(self, subset: int) -> int:
        """Class id of ``subset`` (which must lie inside :attr:`side`)."""
        return self.index[self.signature(subset)]


def enumerate_classes(graph: Graph, side: Iterable[int] | int, d: int,
                      order: Sequence[int] | None = None,
                      rng: random.Random | None = None) -> NecClassTable:
    """Enumerate every class of the d-neighbour equivalence over ``side``.

    Vertices of ``side`` are added one at a time; after step ``i`` the table
    holds exactly the signatures of subsets of the first ``i`` vertices. The
    signature of ``X + v`` depends only on the signature of ``X``, so each new
    signature is the capped sum of an old one with the column of ``v``.

    By default every class keeps its smallest member (ties go to the smaller
    bitmask). With ``rng`` the stored member is instead an arbitrary one,
    which is useful for checking that callers never depend on the choice.
    """
    a = to_mask(side)
    if d < 1:
        raise ValueError("d must be positive")
    rows = _outside_rows(graph, a)
    order = list(bits(a)) if order is None else list(order)
    if to_mask(order) != a or len(order) != a.bit_count():
        raise ValueError("order must list each vertex of the side once")
    current: dict[Signature, int] = {tuple(0 for _ in rows): 0}
    for v in order:
        column = [(row >> v) & 1 for row in rows]
        grown = dict(current)
        bit = 1 << v
        for sig, rep in current.items():
            new_sig = tuple(min(d, s + c) for s, c in zip(sig, column))
            cand = rep | bit
            old = grown.get(new_sig)
            if old is None:
                grown[new_sig] = cand
            elif rng is not None:
                if rng.random() < 0.5:
                    grown[new_sig] = cand
            elif (cand.bit_count(), cand) < (old.bit_count(), old):
                grown[new_sig] = cand
        current = grown
    table = NecClassTable(a, d, rows)
    for sig, rep in sorted(current.items(), key=lambda kv: (kv[1].bit_count(), kv[1])):
        table.index[sig] = len(table.reps)
        table.reps.append(rep)
    return table


def nec_count(graph: Graph, side: Iterable[int] | int, d: int) -> int:
    return len(enumerate_classes(graph, side, d))


def nec_bound(d: int, k: int) -> int:
    """(d*k + 1) ** k, the class-count bound for a cut of rational cut-rank k."""
    return (d * k + 1) ** k


def necd_width(graph: Graph, dec: BranchDecomposition, d: int) -> int:
    """Largest class count over all cuts, taking both sides of each cut."""
    best = 1
    for side in enumerate_cuts(dec):
        best = max(best, nec_count(graph, side, d), nec_count(graph, graph.full & ~side, d))
    return best


def reduce_representative(graph: Graph, side: Iterable[int] | int,
                          subset: Iterable[int] | int, d: int) -> int:
    """Shrink ``subset`` to an equivalent subset of size at most d * cutrank_q.

    For d = 1, vertices are dropped while the neighbourhood across the cut is
    unchanged, leaving every kept vertex with a private outside neighbour (so
    the kept rows are linearly independent). For d > 1 the result is
    ``S1 | reduce(S - S1, d - 1)`` with ``S1 = reduce(S, 1)``.
    """
    a, s = to_mask(side), to_mask(subset)
    if s & ~a:
        raise ValueError("subset is not contained in the cut side")
    if d < 1:
        raise ValueError("d must be positive")
    rows = _outside_rows(graph, a)

    def covered(x: int) -> int:
        # outside positions with at least one neighbour in x
        out = 0
        for j, row in enumerate(rows):
            if row & x:
                out |= 1 << j
        return out

    def reduce(x: int, k: int) -> int:
        if not x:
            return 0
        target = covered(x)
        kept = x
        for v in bits(x):
            trial = kept & ~(1 << v)
            if covered(trial) == target:
                kept = trial
        if k == 1:
            return kept
        return kept | reduce(x & ~kept, k - 1)

    return reduce(s, d)


def member_capped(count: int, allowed: IntSet, d: int) -> bool:
    """Membership test on a count capped at ``d``.

    A capped value below ``d`` is the true count. A capped value of ``d``
    stands for "at least d", which lies in ``allowed`` exactly when the set is
    co-finite, given that nothing at or above ``d`` is listed in it.
    """
    if not 0 <= count <= d:
        raise ValueError(f"capped count {count} outside 0..{d}")
    if allowed.bound > d - 1:
        raise ValueError(f"set {allowed} lists values >= d={d}")
    if count < d:
        return count in allowed
    return allowed.cofinite
