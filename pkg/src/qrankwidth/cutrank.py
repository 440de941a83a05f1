"""Exact rank of 0-1 matrices over Q and GF(2), and the cut-rank functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .graph import Graph, bipartite_adjacency, bits, to_mask

__all__ = [
    "ZeroOneMatrix",
    "CutFunction",
    "rank_q",
    "rank_gf2",
    "cutrank",
    "cutrank_q",
    "cutrank_gf2",
    "distinct_row_col_bound",
    "distinct_row_col_cut",
    "CUT_FUNCTIONS",
]

CutFunction = Callable[[Graph, int], int]


@dataclass(frozen=True)
class ZeroOneMatrix:
    """A 0-1 matrix stored as bit-rows; bit ``j`` of a row is column ``j``."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        limit = 1 << self.ncols
        for row in self.rows:
            if not 0 <= row < limit:
                raise ValueError("row has bits beyond ncols")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "ZeroOneMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for r in entries:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            row = 0
            for j, x in enumerate(r):
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not 0 or 1")
                row |= x << j
            rows.append(row)
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.ncols)] for row in self.rows]

    def transpose(self) -> "ZeroOneMatrix":
        cols = []
        for j in range(self.ncols):
            col = 0
            for i, row in enumerate(self.rows):
                col |= ((row >> j) & 1) << i
            cols.append(col)
        return ZeroOneMatrix(tuple(cols), self.nrows)


def rank_q(matrix: ZeroOneMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    All arithmetic is on Python integers, so the result is exact.
    """
    a = [row for row in matrix.to_lists() if any(row)]
    m, n = len(a), matrix.ncols
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        pivot = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            row = a[r]
            top = a[rank]
            # exact division is guaranteed by Sylvester's identity
            for c in range(col + 1, n):
                row[c] = (p * row[c] - f * top[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def rank_gf2(matrix: ZeroOneMatrix) -> int:
    """Rank over GF(2) by XOR elimination on bit-rows."""
    pivots: dict[int, int] = {}
    for row in matrix.rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def cutrank(graph: Graph, side: Iterable[int] | int, field: str = "q") -> int:
    """Rank of the adjacency matrix of the cut (A, V - A) over ``field``."""
    matrix = bipartite_adjacency(graph, to_mask(side))
    if field in ("q", "Q"):
        return rank_q(matrix)
    if field in ("gf2", "GF2"):
        return rank_gf2(matrix)
    raise ValueError(f"unknown field {field!r}")


def cutrank_q(graph: Graph, side: int) -> int:
    return rank_q(bipartite_adjacency(graph, side))


def cutrank_gf2(graph: Graph, side: int) -> int:
    return rank_gf2(bipartite_adjacency(graph, side))


def distinct_row_col_bound(matrix: ZeroOneMatrix) -> int:
    """min(#distinct rows, #distinct columns); an upper bound on the rank."""
    return min(len(set(matrix.rows)), len(set(matrix.transpose().rows)))


def distinct_row_col_cut(graph: Graph, side: int) -> int:
    return distinct_row_col_bound(bipartite_adjacency(graph, side))


CUT_FUNCTIONS: dict[str, CutFunction] = {
    "q": cutrank_q,
    "gf2": cutrank_gf2,
    "distinct": distinct_row_col_cut,
}
