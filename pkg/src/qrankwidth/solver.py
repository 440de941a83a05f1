"""Dynamic programming for LC-VSP problems over a rooted branch decomposition.

For a node ``w`` with vertex set ``V_w`` the table is indexed by pairs
``(inner, outer)``. ``inner`` gives, for each tracked part ``j``, the
d-neighbour class over ``V_w`` of the part's restriction to ``V_w``; ``outer``
gives the class over ``V - V_w`` of some set standing in for the rest of part
``j``. An entry holds the best cost of a partition of ``V_w`` with that inner
tuple whose vertices all meet their degree constraints, with counts taken
against part-restrictions inside ``V_w`` plus the outer stand-ins.

Counts only matter up to ``d``, and ``min(d, a + b) == min(d, min(d, a) + b)``,
so any member of a class can stand in for the whole class. Only columns of the
degree matrix that are not all-naturals are tracked.

Tables are filled in three passes: inner tuples realizable by some partition
(bottom-up), outer tuples that the root can actually request (top-down), then
costs (bottom-up). Unreachable combinations hold an explicit ``inf``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .decomposition import RootedDecomposition
from .equivalence import NecClassTable, enumerate_classes, member_capped
from .graph import Graph
from .problems import ProblemSpec, verify_solution

__all__ = ["Solution", "NodeTable", "solve", "solve_sigma_rho", "solve_dq"]

INFEASIBLE = math.inf


@dataclass
class Solution:
    """Result of a solve.

    ``parts`` is the witness partition as vertex masks (part 0 first) and
    ``value`` is the size of part 0. For [sigma, rho] problems ``witness`` is
    part 0 alone.
    """

    status: str
    value: int | None = None
    parts: tuple[int, ...] | None = None
    subset_form: bool = False
    tables: list["NodeTable"] | None = field(default=None, repr=False)

    @property
    def feasible(self) -> bool:
        return self.status == "optimal"

    @property
    def witness(self):
        if self.parts is None:
            return None
        return self.parts[0] if self.subset_form else self.parts


@dataclass
class NodeTable:
    inner_classes: NecClassTable
    outer_classes: NecClassTable
    inner: list[tuple[int, ...]]
    outer: list[tuple[int, ...]]
    entries: dict[tuple[tuple[int, ...], tuple[int, ...]], float]

    def by_signature(self) -> dict:
        """Entries keyed by class signatures instead of class ids."""
        isig = {i: s for s, i in self.inner_classes.index.items()}
        osig = {i: s for s, i in self.outer_classes.index.items()}
        return {
            (tuple(isig[c] for c in inner), tuple(osig[o] for o in outer)): value
            for (inner, outer), value in self.entries.items()
        }


def _part_cost(spec: ProblemSpec, part: int) -> int:
    if part != 0 or spec.objective == "feas":
        return 0
    return 1 if spec.objective == "min" else -1


def solve(graph: Graph, rooted: RootedDecomposition, spec: ProblemSpec,
          rng: random.Random | None = None, keep_tables: bool = False) -> Solution:
    """Solve ``spec`` on ``graph`` along ``rooted``.

    The returned witness is re-checked against the uncapped constraints; a
    failure there raises ``AssertionError``. ``rng`` randomizes which class
    members serve as representatives (the answer must not change).
    """
    if rooted.vertices[rooted.root] != graph.full:
        raise ValueError("decomposition does not cover exactly the graph's vertices")
    q = spec.q
    d = max(1, spec.d)
    matrix = spec.matrix
    tracked = [j for j in range(q) if any(not matrix[i][j].is_naturals for i in range(q))]
    subset_form = spec.kind == "sigma-rho"

    if graph.n == 0:
        return Solution("optimal", 0, tuple(0 for _ in range(q)), subset_form)

    order = rooted.postorder()
    inner_cls: dict[int, NecClassTable] = {}
    outer_cls: dict[int, NecClassTable] = {}
    for w in order:
        inner_cls[w] = enumerate_classes(graph, rooted.vertices[w], d, rng=rng)
        outer_cls[w] = enumerate_classes(graph, graph.full & ~rooted.vertices[w], d, rng=rng)

    # pass 1: realizable inner tuples
    inner: dict[int, list[tuple[int, ...]]] = {}
    leaf_parts: dict[int, dict[tuple[int, ...], list[int]]] = {}
    join_map: dict[int, dict[tuple, tuple[int, ...]]] = {}
    for w in order:
        table = inner_cls[w]
        v = rooted.leaf_vertex[w]
        if v is not None:
            by_tuple: dict[tuple[int, ...], list[int]] = {}
            for i in range(q):
                c = tuple(table.classify(1 << v if j == i else 0) for j in tracked)
                by_tuple.setdefault(c, []).append(i)
            leaf_parts[w] = by_tuple
            inner[w] = list(by_tuple)
            continue
        a, b = rooted.children[w]
        ra, rb = inner_cls[a].reps, inner_cls[b].reps
        jm = {}
        for ca in inner[a]:
            for cb in inner[b]:
                jm[ca, cb] = tuple(table.classify(ra[x] | rb[y]) for x, y in zip(ca, cb))
        join_map[w] = jm
        inner[w] = sorted(set(jm.values()))

    # pass 2: outer tuples requested from above
    root = rooted.root
    needed: dict[int, list[tuple[int, ...]]] = {root: [tuple(outer_cls[root].classify(0) for _ in tracked)]}
    outer_map: dict[int, dict[tuple, tuple[int, ...]]] = {}
    for w in reversed(order):
        if rooted.leaf_vertex[w] is not None:
            continue
        a, b = rooted.children[w]
        ro = outer_cls[w].reps
        for child, sibling in ((a, b), (b, a)):
            rs = inner_cls[sibling].reps
            table = outer_cls[child]
            om = {}
            for o in needed[w]:
                for cs in inner[sibling]:
                    om[cs, o] = tuple(table.classify(rs[x] | ro[y]) for x, y in zip(cs, o))
            outer_map[child] = om
            needed[child] = sorted(set(om.values()))

    # pass 3: costs
    entries: dict[int, dict] = {}
    back: dict[int, dict] = {}
    for w in order:
        tab = {(c, o): INFEASIBLE for c in inner[w] for o in needed[w]}
        ptr = {}
        v = rooted.leaf_vertex[w]
        if v is not None:
            ro = outer_cls[w].reps
            adj = graph.adj[v]
            for c, part_list in leaf_parts[w].items():
                for o in needed[w]:
                    counts = [min(d, (adj & ro[y]).bit_count()) for y in o]
                    for i in part_list:
                        ok = all(
                            member_capped(cnt, matrix[i][j], d)
                            for j, cnt in zip(tracked, counts)
                            if not matrix[i][j].is_naturals
                        )
                        cost = _part_cost(spec, i)
                        if ok and cost < tab[c, o]:
                            tab[c, o] = cost
                            ptr[c, o] = i
        else:
            a, b = rooted.children[w]
            ta, tb = entries[a], entries[b]
            ma, mb = outer_map[a], outer_map[b]
            jm = join_map[w]
            for o in needed[w]:
                for ca in inner[a]:
                    ob = mb[ca, o]
                    for cb in inner[b]:
                        oa = ma[cb, o]
                        va = ta[ca, oa]
                        if va == INFEASIBLE:
                            continue
                        vb = tb[cb, ob]
                        if vb == INFEASIBLE:
                            continue
                        key = (jm[ca, cb], o)
                        if va + vb < tab[key]:
                            tab[key] = va + vb
                            ptr[key] = (ca, oa, cb, ob)
        entries[w] = tab
        back[w] = ptr

    tables = None
    if keep_tables:
        tables = [
            NodeTable(inner_cls[w], outer_cls[w], inner[w], needed[w], entries[w]) for w in range(len(rooted.children))
        ]

    o_root = needed[root][0]
    best_c = min(inner[root], key=lambda c: entries[root][c, o_root])
    if entries[root][best_c, o_root] == INFEASIBLE:
        return Solution("infeasible", None, None, subset_form, tables)

    parts = [0] * q
    stack = [(root, best_c, o_root)]
    while stack:
        w, c, o = stack.pop()
        step = back[w][c, o]
        if rooted.leaf_vertex[w] is not None:
            parts[step] |= 1 << rooted.leaf_vertex[w]
        else:
            ca, oa, cb, ob = step
            a, b = rooted.children[w]
            stack.append((a, ca, oa))
            stack.append((b, cb, ob))
    parts = tuple(parts)
    assert verify_solution(graph, spec, parts[0] if subset_form else parts), "DP produced a witness violating the constraints"
    return Solution("optimal", parts[0].bit_count(), parts, subset_form, tables)


def solve_sigma_rho(graph: Graph, rooted: RootedDecomposition, spec: ProblemSpec, **kwargs) -> Solution:
    if spec.kind != "sigma-rho":
        raise ValueError("expected a [sigma, rho] problem")
    return solve(graph, rooted, spec, **kwargs)


def solve_dq(graph: Graph, rooted: RootedDecomposition, spec: ProblemSpec, **kwargs) -> Solution:
    return solve(graph, rooted, spec, **kwargs)
