import random

import pytest

from qrankwidth.cutrank import cutrank_q
from qrankwidth.decomposition import caterpillar, root_at_edge
from qrankwidth.graph import Graph, generate_family
from qrankwidth.oracles import brute_dq, brute_sigma_rho
from qrankwidth.problems import (
    NATURALS,
    IntSet,
    catalog_lookup,
    degree_matrix,
    degree_matrix_from_H,
    verify_solution,
)
from qrankwidth.search import decompose
from qrankwidth.solver import solve, solve_dq, solve_sigma_rho


def rooted(graph, edge=0):
    return root_at_edge(decompose(graph, cutrank_q).decomposition, edge)


def run(graph, name, **kwargs):
    return solve(graph, rooted(graph), catalog_lookup(name), **kwargs)


def test_small_examples(p3, c5, k4):
    sol = run(p3, "dominating-set")
    assert sol.feasible and sol.value == 1 and sol.witness == 0b010
    sol = run(c5, "dominating-set")
    assert sol.value == 2
    assert verify_solution(c5, catalog_lookup("dominating-set"), sol.witness)
    assert run(k4, "perfect-code").value == 1
    assert run(c5, "independent-set").value == 2
    assert run(k4, "independent-set").value == 1


def test_infeasible(c5):
    c4 = generate_family("cycle", n=4)
    sol = run(c4, "perfect-code")
    assert sol.status == "infeasible" and not sol.feasible
    assert sol.witness is None


def test_homomorphisms(c5, k4):
    k2, k3 = generate_family("complete", n=2), generate_family("complete", n=3)
    c6 = generate_family("cycle", n=6)
    assert solve(c5, rooted(c5), degree_matrix_from_H(k3, "coloring")).feasible
    assert not solve(c5, rooted(c5), degree_matrix_from_H(k2, "coloring")).feasible
    assert not solve(k4, rooted(k4), degree_matrix_from_H(k3, "coloring")).feasible
    assert solve(c6, rooted(c6), degree_matrix_from_H(k2, "coloring")).feasible
    # each C6 vertex has two neighbours, K2 covering needs exactly one
    assert not solve(c6, rooted(c6), degree_matrix_from_H(k2, "covering")).feasible
    sol = solve(c6, rooted(c6), degree_matrix_from_H(k3, "covering"))
    assert sol.feasible and len(sol.parts) == 3
    assert verify_solution(c6, degree_matrix_from_H(k3, "covering"), sol.parts)


def test_every_root_edge_agrees():
    g = generate_family("gnp", seed=17, n=8, p=0.4)
    dec = decompose(g, cutrank_q).decomposition
    for name in ("dominating-set", "perfect-code", "induced-matching", "total-dominating-set"):
        values = {solve(g, root_at_edge(dec, e), catalog_lookup(name)).value for e in range(len(dec.edges))}
        assert len(values) == 1


def test_against_oracle_random():
    rng = random.Random(21)
    names = ["independent-dominating-set", "strong-stable-set", "perfect-dominating-set",
             "total-perfect-dominating-set", "d-dominating-set:2", "min-degree-d:2"]
    for _ in range(30):
        n = rng.randint(1, 8)
        g = generate_family("gnp", seed=rng.randrange(10 ** 6), n=n, p=rng.random())
        r = rooted(g) if n > 1 else root_at_edge(caterpillar([0]))
        for name in names:
            spec = catalog_lookup(name)
            sol = solve(g, r, spec)
            ref = brute_sigma_rho(g, spec)
            assert sol.feasible == (ref is not None)
            if ref is not None and spec.objective != "feas":
                assert sol.value == ref[0]


def test_custom_sigma_rho_and_feas(c5):
    spec = degree_matrix([[IntSet.finite([1]), NATURALS], [IntSet.finite([0, 2]), NATURALS]], "max")
    sol = solve(c5, rooted(c5), spec)
    ref = brute_dq(c5, spec)
    assert sol.value == ref[0]
    feas = catalog_lookup("dominating-set").with_objective("feas")
    assert solve(c5, rooted(c5), feas).feasible


def test_dq_with_objective():
    g = generate_family("gnp", seed=4, n=7, p=0.5)
    k3 = generate_family("complete", n=3)
    for objective in ("min", "max"):
        spec = degree_matrix_from_H(k3, "coloring", objective)
        sol = solve_dq(g, rooted(g), spec)
        ref = brute_dq(g, spec)
        assert sol.feasible == (ref is not None)
        if ref:
            assert sol.value == ref[0]


def test_representative_choice_does_not_matter():
    g = generate_family("gnp", seed=31, n=9, p=0.45)
    r = rooted(g)
    for name in ("dominating-set", "perfect-code", "d-dominating-set:2"):
        spec = catalog_lookup(name)
        base = solve(g, r, spec, keep_tables=True)
        for seed in range(3):
            other = solve(g, r, spec, rng=random.Random(seed), keep_tables=True)
            assert other.value == base.value
            for t1, t2 in zip(base.tables, other.tables):
                assert t1.by_signature() == t2.by_signature()


def test_monotone_chain():
    rng = random.Random(2)
    for _ in range(15):
        g = generate_family("gnp", seed=rng.randrange(10 ** 6), n=rng.randint(2, 9), p=0.5)
        r = rooted(g)
        ds = solve(g, r, catalog_lookup("dominating-set")).value
        ids = solve(g, r, catalog_lookup("independent-dominating-set")).value
        assert ds <= ids <= g.n


def test_trivial_graphs():
    empty = Graph.from_edges(0, [])
    r0 = root_at_edge(decompose(empty, cutrank_q).decomposition)
    sol = solve(empty, r0, catalog_lookup("dominating-set"))
    assert sol.feasible and sol.value == 0
    single = Graph.from_edges(1, [])
    r1 = root_at_edge(decompose(single, cutrank_q).decomposition)
    assert solve(single, r1, catalog_lookup("dominating-set")).value == 1
    assert solve(single, r1, catalog_lookup("independent-set")).value == 1
    assert not solve(single, r1, catalog_lookup("total-dominating-set")).feasible


def test_wrappers(c5):
    with pytest.raises(ValueError):
        solve_sigma_rho(c5, rooted(c5), degree_matrix_from_H(generate_family("complete", n=3), "coloring"))
    assert solve_sigma_rho(c5, rooted(c5), catalog_lookup("dominating-set")).value == 2
    with pytest.raises(ValueError):
        solve(c5, rooted(generate_family("path", n=4)), catalog_lookup("dominating-set"))
