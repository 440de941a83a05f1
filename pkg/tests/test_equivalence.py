import random

import pytest
from hypothesis import given, settings, strategies as st

from qrankwidth.cutrank import cutrank_q
from qrankwidth.decomposition import parse_decomposition
from qrankwidth.equivalence import (
    enumerate_classes,
    member_capped,
    nec_bound,
    nec_count,
    necd_width,
    reduce_representative,
    signature_d,
)
from qrankwidth.graph import Graph, bits, generate_family
from qrankwidth.oracles import brute_nec_classes
from qrankwidth.problems import NATURALS, IntSet


def test_signature_examples(p3):
    # A = {0, 2}, outside is vertex 1 adjacent to both
    assert signature_d(p3, {0, 2}, {0, 2}, 1) == (1,)
    assert signature_d(p3, {0, 2}, {0, 2}, 2) == (2,)
    assert signature_d(p3, {0, 2}, set(), 2) == (0,)
    k33 = generate_family("complete_bipartite", a=3, b=3)
    assert signature_d(k33, {0, 1, 2}, {0, 1}, 2) == (2, 2, 2)
    assert signature_d(k33, {0, 1, 2}, {0, 1}, 1) == (1, 1, 1)


def test_signature_rejects_bad_input(p3):
    with pytest.raises(ValueError):
        signature_d(p3, {0}, {1}, 1)
    with pytest.raises(ValueError):
        signature_d(p3, {0}, {0}, 0)


def test_enumerate_classes_p3(p3):
    table = enumerate_classes(p3, {0, 2}, 2)
    assert len(table) == 3
    assert table.reps == [0, 1, 5]
    assert table.classify(4) == table.classify(1)


def test_nec_count_examples(p3):
    assert nec_count(p3, {0, 2}, 1) == 2
    c4 = generate_family("cycle", n=4)
    assert nec_count(c4, {0, 2}, 1) == 2
    assert nec_count(c4, {0, 2}, 2) == 3
    star = generate_family("star", n=4)
    assert nec_count(star, {1, 2, 3}, 2) == 3
    for a, b in [(1, 1), (2, 3), (4, 2)]:
        g = generate_family("complete_bipartite", a=a, b=b)
        assert nec_count(g, range(a), 1) == 2


def test_nec_count_matches_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = generate_family("gnp", seed=rng.randrange(10 ** 6), n=n, p=rng.random())
        side = [v for v in range(n) if rng.random() < 0.5]
        for d in (1, 2, 3):
            assert nec_count(g, side, d) == brute_nec_classes(g, side, d)


def test_empty_and_full_side(c5):
    assert nec_count(c5, 0, 3) == 1
    assert nec_count(c5, c5.full, 3) == 1


def test_bound_holds():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 10)
        g = generate_family("gnp", seed=rng.randrange(10 ** 6), n=n, p=0.5)
        side = rng.randrange(1 << n)
        k = cutrank_q(g, side)
        for d in (1, 2, 3):
            assert nec_count(g, side, d) <= nec_bound(d, k)


def test_nec_bound_values():
    assert nec_bound(1, 0) == 1
    assert nec_bound(1, 1) == 2
    assert nec_bound(2, 2) == 25


def test_necd_width_examples():
    cat = parse_decomposition("((0,1),(2,3))")
    assert necd_width(generate_family("path", n=4), cat, 1) == 2
    assert necd_width(generate_family("empty", n=4), cat, 1) == 1
    assert necd_width(generate_family("complete", n=4), cat, 1) == 2
    assert necd_width(Graph.from_edges(1, []), parse_decomposition("0"), 2) == 1


def test_representatives_are_minimal():
    g = generate_family("gnp", seed=3, n=9, p=0.4)
    side = 0b101101010
    for d in (1, 2):
        table = enumerate_classes(g, side, d)
        best = {}
        x = side
        while True:
            sig = table.signature(x)
            best[sig] = min(best.get(sig, 99), x.bit_count())
            if x == 0:
                break
            x = (x - 1) & side
        for sig, rep in zip(table.index, table.reps):
            assert rep.bit_count() == best[table.signature(rep)]
        assert max(r.bit_count() for r in table.reps) <= d * cutrank_q(g, side)


def test_order_and_rng_give_same_classes():
    g = generate_family("gnp", seed=9, n=10, p=0.5)
    side = 0b1100110101
    base = set(enumerate_classes(g, side, 2).index)
    order = list(reversed(list(bits(side))))
    assert set(enumerate_classes(g, side, 2, order=order).index) == base
    table = enumerate_classes(g, side, 2, rng=random.Random(1))
    assert set(table.index) == base
    for sig, rep in zip(table.index, table.reps):
        assert table.signature(rep) == sig


def test_bad_order_rejected(p3):
    with pytest.raises(ValueError):
        enumerate_classes(p3, {0, 2}, 1, order=[0])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 10 ** 6), st.integers(1, 3), st.data())
def test_reduce_representative(n, seed, d, data):
    g = generate_family("gnp", seed=seed, n=n, p=0.5)
    side = data.draw(st.integers(0, g.full))
    subset = data.draw(st.integers(0, side)) & side
    r = reduce_representative(g, side, subset, d)
    assert r & ~subset == 0
    assert signature_d(g, side, r, d) == signature_d(g, side, subset, d)
    assert r.bit_count() <= d * cutrank_q(g, side)


def test_reduce_example():
    star = generate_family("star", n=5)
    # every leaf has the centre as its only outside neighbour
    assert reduce_representative(star, {1, 2, 3, 4}, {1, 2, 3}, 1).bit_count() == 1
    assert reduce_representative(star, {1, 2, 3, 4}, {1, 2, 3}, 2).bit_count() == 2


def test_member_capped_examples():
    pos = IntSet.at_least(1)
    assert member_capped(0, NATURALS, 1)
    assert not member_capped(0, pos, 1)
    assert member_capped(1, pos, 1)
    one = IntSet.finite([1])
    assert member_capped(1, one, 2)
    assert not member_capped(2, one, 2)
    with pytest.raises(ValueError):
        member_capped(3, one, 2)
    with pytest.raises(ValueError):
        member_capped(1, one, 1)


def test_pair_equivalent_at_d1_only(p3):
    # {0} and {0, 2} reach the middle vertex once versus twice
    assert signature_d(p3, {0, 2}, {0}, 1) == signature_d(p3, {0, 2}, {0, 2}, 1)
    assert signature_d(p3, {0, 2}, {0}, 2) != signature_d(p3, {0, 2}, {0, 2}, 2)
