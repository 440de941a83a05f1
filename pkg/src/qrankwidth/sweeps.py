"""Verification sweeps: solver against oracles, and the width/class-count bounds.

Each sweep returns a :class:`SweepResult`; the ``verify`` command and the
acceptance tests both run them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .cutrank import ZeroOneMatrix, cutrank_q, distinct_row_col_bound, rank_gf2, rank_q
from .decomposition import caterpillar, enumerate_cuts, root_at_edge
from .equivalence import enumerate_classes, member_capped, nec_bound, reduce_representative, signature_d
from .graph import Graph, bipartite_adjacency, bits, generate_family
from .oracles import brute_dq, brute_nec_classes, brute_sigma_rho
from .problems import CATALOG, H_VARIANTS, PARAMETERIZED, catalog_lookup, degree_matrix_from_H, IntSet
from .search import decompose, exact_optimal_decomposition, greedy_decomposition
from .solver import solve

__all__ = [
    "SweepResult",
    "REFERENCE_CUT_MATRIX",
    "connected_corpus",
    "catalog_problems",
    "sweep_reference_rank",
    "sweep_solver_oracle",
    "sweep_class_bound",
    "sweep_reduction",
    "sweep_rank_chain",
    "sweep_forest_treewidth",
    "free_trees",
    "sweep_catalog_d",
    "sweep_decomposition_independence",
    "sweep_nec_enumeration",
    "sweep_capping_law",
    "run_all",
]

REFERENCE_CUT_MATRIX = ZeroOneMatrix.from_lists([
    [1, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [0, 1, 1, 0],
    [0, 0, 0, 1],
])

# published d(pi) values for the catalog
EXPECTED_D = {
    "independent-set": 1,
    "dominating-set": 1,
    "independent-dominating-set": 1,
    "total-dominating-set": 1,
    "perfect-code": 2,
    "strong-stable-set": 2,
    "induced-matching": 2,
    "perfect-dominating-set": 2,
    "total-perfect-dominating-set": 2,
}
EXPECTED_D_PARAM = {
    "d-dominating-set": lambda d: d,
    "min-degree-d": lambda d: d,
    "max-degree-d": lambda d: d + 1,
    "induced-d-regular": lambda d: d + 1,
}
EXPECTED_D_H = {"coloring": 1, "role-assignment": 1, "covering": 2, "partial-covering": 2}


@dataclass
class SweepResult:
    number: int
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.number:>2} {self.name}: {self.checks} checks, {len(self.failures)} failures"
        if self.failures:
            text += f" (first: {self.failures[0]})"
        return text


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full


def random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.choice([0.2, 0.35, 0.5, 0.7])
    return generate_family("gnp", seed=rng.randrange(1 << 32), n=n, p=p)


def connected_corpus(count: int = 500, max_n: int = 7, seed: int = 0) -> list[Graph]:
    """Seeded connected G(n, p) graphs with n cycling through 2..max_n."""
    out = []
    s = seed
    for i in range(count):
        n = 2 + i % (max_n - 1)
        p = (0.3, 0.45, 0.6, 0.8)[(i // (max_n - 1)) % 4]
        while True:
            g = generate_family("gnp", seed=s, n=n, p=p)
            s += 1
            if _is_connected(g):
                break
        out.append(g)
    return out


def catalog_problems(degrees=(1, 2)):
    specs = list(CATALOG.values())
    for name in PARAMETERIZED:
        specs += [catalog_lookup(name, d) for d in degrees]
    return specs


def _decomp(g: Graph):
    return decompose(g, cutrank_q).decomposition


def sweep_reference_rank() -> SweepResult:
    res = SweepResult(1, "reference 5x4 cut matrix has rational rank 4")
    res.checks = 1
    r = rank_q(REFERENCE_CUT_MATRIX)
    if r != 4:
        res.fail(f"rank_q = {r}")
    return res


def sweep_solver_oracle(corpus_size: int = 500, dq_corpus_size: int = 500, seed: int = 0) -> SweepResult:
    res = SweepResult(2, "DP solver agrees with brute force (sigma-rho and D_q)")
    corpus = connected_corpus(max(corpus_size, dq_corpus_size), 7, seed)
    problems = catalog_problems()
    hs = {
        "K2": generate_family("complete", n=2),
        "K3": generate_family("complete", n=3),
        "P3": generate_family("path", n=3),
    }
    dq_specs = [(h, v, degree_matrix_from_H(hg, v)) for h, hg in hs.items() for v in H_VARIANTS]
    for idx, g in enumerate(corpus):
        rooted = root_at_edge(_decomp(g))
        if idx < corpus_size:
            for spec in problems:
                sol = solve(g, rooted, spec)
                expect = brute_sigma_rho(g, spec)
                res.checks += 1
                got = sol.value if sol.feasible else None
                want = expect[0] if expect is not None else None
                if got != want:
                    res.fail(f"graph {g.edges()} n={g.n} {spec.name}: dp={got} brute={want}")
        if idx < dq_corpus_size:
            for h, variant, spec in dq_specs:
                sol = solve(g, rooted, spec)
                expect = brute_dq(g, spec)
                res.checks += 1
                if sol.feasible != (expect is not None):
                    res.fail(f"graph {g.edges()} n={g.n} H={h} {variant}: dp={sol.feasible} brute={expect is not None}")
    return res


def _random_cut(rng: random.Random, g: Graph) -> int:
    return rng.randrange(1 << g.n)


def sweep_class_bound(samples: int = 1000, max_n: int = 16, seed: int = 1) -> SweepResult:
    res = SweepResult(3, "nec_d(A) <= (d k + 1)^k with k = rational cut-rank")
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_graph(rng, rng.randint(2, max_n))
        a = _random_cut(rng, g)
        d = rng.randint(1, 3)
        k = cutrank_q(g, a)
        count = len(enumerate_classes(g, a, d))
        res.checks += 1
        if count > nec_bound(d, k):
            res.fail(f"n={g.n} A={a:#x} d={d}: nec={count} > bound {nec_bound(d, k)}")
    return res


def sweep_reduction(samples: int = 1000, max_n: int = 16, seed: int = 2) -> SweepResult:
    res = SweepResult(4, "representative reduction: R in S, |R| <= d k, same class")
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_graph(rng, rng.randint(2, max_n))
        a = _random_cut(rng, g)
        s = a & rng.randrange(1 << g.n)
        d = rng.randint(1, 3)
        k = cutrank_q(g, a)
        r = reduce_representative(g, a, s, d)
        res.checks += 1
        if r & ~s:
            res.fail(f"n={g.n} A={a:#x} S={s:#x}: R not inside S")
        elif r.bit_count() > d * k:
            res.fail(f"n={g.n} A={a:#x} S={s:#x} d={d}: |R|={r.bit_count()} > {d * k}")
        elif signature_d(g, a, r, d) != signature_d(g, a, s, d):
            res.fail(f"n={g.n} A={a:#x} S={s:#x} d={d}: signatures differ")
    return res


def _chain_check(res: SweepResult, g: Graph, a: int) -> None:
    m = bipartite_adjacency(g, a)
    lo, mid, hi = rank_gf2(m), rank_q(m), distinct_row_col_bound(m)
    res.checks += 1
    if not lo <= mid <= hi:
        res.fail(f"n={g.n} A={a:#x}: gf2={lo} q={mid} distinct={hi}")


def sweep_rank_chain(corpus_size: int = 200, seed: int = 3) -> SweepResult:
    """Every subset of small corpus graphs, and every decomposition cut of larger ones."""
    res = SweepResult(5, "rank_gf2 <= rank_q <= distinct rows/cols on every cut")
    rng = random.Random(seed)
    for g in connected_corpus(corpus_size, 8, seed):
        for a in range(1 << g.n):
            _chain_check(res, g, a)
    for _ in range(corpus_size):
        g = random_graph(rng, rng.randint(9, 16))
        dec = greedy_decomposition(g, cutrank_q, seed=rng.randrange(100)).decomposition
        for a in enumerate_cuts(dec):
            _chain_check(res, g, a)
    for g in (generate_family("grid", rows=3, cols=3), generate_family("grid", rows=4, cols=4)):
        for a in enumerate_cuts(greedy_decomposition(g, cutrank_q).decomposition):
            _chain_check(res, g, a)
    return res


def _tree_code(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _canonical_tree(edges: list[tuple[int, int]], n: int) -> str:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # peel leaves down to the one or two centres
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return min(_tree_code(adj, c, -1) for c in layer)


def free_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on ``n`` vertices (grown leaf by leaf)."""
    level = {"": []} if n >= 1 else {}
    for size in range(2, n + 1):
        grown = {}
        for edges in level.values():
            for v in range(size - 1):
                cand = edges + [(v, size - 1)]
                grown.setdefault(_canonical_tree(cand, size), cand)
        level = grown
    return [Graph.from_edges(n, edges) for edges in level.values()]


def sweep_forest_treewidth(max_tree_n: int = 10) -> SweepResult:
    res = SweepResult(6, "Q-rank-width 1 on trees, <= treewidth + 1 on paths/cycles/3x3 grid")

    def width(g: Graph) -> int:
        return exact_optimal_decomposition(g, cutrank_q).width

    for n in range(2, max_tree_n + 1):
        for t in free_trees(n):
            res.checks += 1
            w = width(t)
            if w != 1:
                res.fail(f"tree {t.edges()}: width {w}")
    for n in range(2, 11):
        res.checks += 1
        w = width(generate_family("path", n=n))
        if w > 2:
            res.fail(f"path n={n}: width {w} > 2")
        if n >= 3:
            res.checks += 1
            w = width(generate_family("cycle", n=n))
            if w > 3:
                res.fail(f"cycle n={n}: width {w} > 3")
    res.checks += 1
    w = width(generate_family("grid", rows=3, cols=3))
    if w > 4:
        res.fail(f"3x3 grid: width {w} > 4")
    return res


def sweep_catalog_d() -> SweepResult:
    res = SweepResult(7, "catalog d(pi) matches published values")
    for name, want in EXPECTED_D.items():
        res.checks += 1
        got = catalog_lookup(name).d
        if got != want:
            res.fail(f"{name}: d={got}, expected {want}")
    for name, rule in EXPECTED_D_PARAM.items():
        for k in range(1, 5):
            res.checks += 1
            got = catalog_lookup(name, k).d
            if got != rule(k):
                res.fail(f"{name}[{k}]: d={got}, expected {rule(k)}")
    for h in (generate_family("complete", n=2), generate_family("complete", n=3), generate_family("path", n=3)):
        for variant, want in EXPECTED_D_H.items():
            res.checks += 1
            spec = degree_matrix_from_H(h, variant)
            if spec.d != want or spec.q != h.n:
                res.fail(f"H n={h.n} {variant}: d={spec.d} q={spec.q}")
    return res


def sweep_decomposition_independence(count: int = 50, max_n: int = 8, seed: int = 4) -> SweepResult:
    res = SweepResult(8, "dominating set optimum is the same on every decomposition")
    rng = random.Random(seed)
    spec = catalog_lookup("dominating-set")
    for _ in range(count):
        g = random_graph(rng, rng.randint(2, max_n))
        decs = {
            "exact": exact_optimal_decomposition(g, cutrank_q).decomposition,
            "greedy0": greedy_decomposition(g, cutrank_q, seed=0).decomposition,
            "greedy1": greedy_decomposition(g, cutrank_q, seed=1).decomposition,
            "caterpillar": caterpillar(range(g.n)),
        }
        values = {k: solve(g, root_at_edge(dec), spec).value for k, dec in decs.items()}
        res.checks += 1
        if len(set(values.values())) != 1:
            res.fail(f"graph {g.edges()} n={g.n}: {values}")
    return res


def sweep_nec_enumeration(count: int = 60, max_n: int = 12, seed: int = 5) -> SweepResult:
    res = SweepResult(9, "class enumeration count equals brute-force bucketing")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng, rng.randint(2, max_n))
        dec = greedy_decomposition(g, cutrank_q, seed=0).decomposition
        for a in enumerate_cuts(dec):
            for side in (a, g.full & ~a):
                if side.bit_count() > 10:
                    continue
                for d in (1, 2, 3):
                    res.checks += 1
                    got = len(enumerate_classes(g, side, d))
                    want = brute_nec_classes(g, list(bits(side)), d)
                    if got != want:
                        res.fail(f"graph {g.edges()} A={side:#x} d={d}: {got} != {want}")
    return res


def _catalog_intsets() -> list[IntSet]:
    sets = set()
    for spec in catalog_problems((1, 2, 3)):
        sets.update(s for row in spec.matrix for s in row)
    for variant in H_VARIANTS.values():
        sets.add(variant)
    sets.add(IntSet.finite([0]))
    return sorted(sets, key=str)


def sweep_capping_law(max_d: int = 4) -> SweepResult:
    res = SweepResult(10, "capping composition law and capped membership")
    for d in range(1, max_d + 1):
        for a in range(2 * d + 1):
            for b in range(2 * d + 1):
                res.checks += 1
                if min(d, a + b) != min(d, min(d, a) + min(d, b)):
                    res.fail(f"d={d} a={a} b={b}")
    for s in _catalog_intsets():
        for d in range(max(1, s.bound + 1), max_d + 1):
            for a in range(2 * d + 1):
                res.checks += 1
                if member_capped(min(d, a), s, d) != (a in s):
                    res.fail(f"set {s} d={d} a={a}")
    return res


SWEEPS: list[Callable[[], SweepResult]] = [
    sweep_reference_rank,
    sweep_solver_oracle,
    sweep_class_bound,
    sweep_reduction,
    sweep_rank_chain,
    sweep_forest_treewidth,
    sweep_catalog_d,
    sweep_decomposition_independence,
    sweep_nec_enumeration,
    sweep_capping_law,
]


def run_all(quick: bool = False) -> list[SweepResult]:
    """Run every sweep; ``quick`` shrinks the sampled corpora."""
    if not quick:
        return [sweep() for sweep in SWEEPS]
    return [
        sweep_reference_rank(),
        sweep_solver_oracle(40, 20),
        sweep_class_bound(100),
        sweep_reduction(100),
        sweep_rank_chain(20),
        sweep_forest_treewidth(8),
        sweep_catalog_d(),
        sweep_decomposition_independence(10),
        sweep_nec_enumeration(10),
        sweep_capping_law(),
    ]
