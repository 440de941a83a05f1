import math

import pytest

from qrankwidth.cutrank import cutrank_gf2, cutrank_q
from qrankwidth.decomposition import enumerate_cuts, serialize_decomposition, validate
from qrankwidth.graph import generate_family
from qrankwidth.oracles import (
    OracleTooLarge,
    all_decompositions,
    brute_dq,
    brute_nec_classes,
    brute_sigma_rho,
    brute_width,
)
from qrankwidth.problems import catalog_lookup, degree_matrix_from_H


def double_factorial(k):
    return math.prod(range(k, 0, -2)) if k > 0 else 1


@pytest.mark.parametrize("n", range(2, 8))
def test_decomposition_count(n):
    decs = list(all_decompositions(n))
    expected = 1 if n < 3 else double_factorial(2 * n - 5)
    assert len(decs) == expected
    assert all(validate(d) == [] for d in decs)
    assert len({serialize_decomposition(d) for d in decs}) == expected


def test_decomposition_edges(c5):
    for dec in all_decompositions(5):
        assert len(enumerate_cuts(dec)) == 2 * 5 - 3


def test_brute_sigma_rho_examples(p3, c5, k4):
    assert brute_sigma_rho(p3, catalog_lookup("dominating-set")) == (1, frozenset({1}))
    assert brute_sigma_rho(c5, catalog_lookup("dominating-set"))[0] == 2
    assert brute_sigma_rho(k4, catalog_lookup("perfect-code"))[0] == 1
    assert brute_sigma_rho(generate_family("cycle", n=4), catalog_lookup("perfect-code")) is None
    assert brute_sigma_rho(c5, catalog_lookup("independent-set"))[0] == 2


def test_brute_dq_examples(c5, k4):
    k2, k3 = generate_family("complete", n=2), generate_family("complete", n=3)
    assert brute_dq(c5, degree_matrix_from_H(k3, "coloring")) is not None
    assert brute_dq(c5, degree_matrix_from_H(k2, "coloring")) is None
    assert brute_dq(k4, degree_matrix_from_H(k3, "coloring")) is None
    c6 = generate_family("cycle", n=6)
    assert brute_dq(c6, degree_matrix_from_H(k2, "covering")) is None
    assert brute_dq(c6, degree_matrix_from_H(k3, "covering")) is not None


def test_brute_nec_examples(p3):
    c4 = generate_family("cycle", n=4)
    assert brute_nec_classes(p3, [0, 2], 1) == 2
    assert brute_nec_classes(c4, [0, 2], 2) == 3
    assert brute_nec_classes(generate_family("star", n=4), [1, 2, 3], 2) == 3


def test_brute_width_examples(c5, k4):
    assert brute_width(c5, cutrank_q) == 2
    assert brute_width(c5, cutrank_gf2) == 2
    assert brute_width(k4, cutrank_q) == 1
    assert brute_width(generate_family("path", n=4), cutrank_q) == 1
    assert brute_width(generate_family("complete_bipartite", a=3, b=3), cutrank_q) == 1


def test_size_limits():
    big = generate_family("path", n=21)
    with pytest.raises(OracleTooLarge):
        brute_sigma_rho(big, catalog_lookup("dominating-set"))
    with pytest.raises(OracleTooLarge):
        brute_dq(big, degree_matrix_from_H(generate_family("complete", n=3), "coloring"))
    with pytest.raises(OracleTooLarge):
        brute_nec_classes(big, range(15), 1)


def test_free_tree_counts():
    from qrankwidth.sweeps import free_trees

    counts = [len(free_trees(n)) for n in range(1, 11)]
    assert counts == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    assert all(t.m == t.n - 1 for t in free_trees(7))
