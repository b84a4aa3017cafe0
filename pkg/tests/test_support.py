import random
from math import comb

import pytest

from balanced_mds.support import (
    BipartiteGraph,
    SupportMatrix,
    check_all_k_subsets_matchable,
    check_hall_columns,
    check_p1,
    check_p2,
    check_p3_bruteforce,
    check_p3_matching,
    column_weights,
    format_sm,
    initial_cyclic_matrix,
    max_bipartite_matching,
    parse_sm,
)


def random_matrix(rng: random.Random, k: int, n: int, density: float) -> SupportMatrix:
    return SupportMatrix.from_rows(
        [[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(k)]
    )


def test_initial_cyclic_small():
    m = initial_cyclic_matrix(4, 2)
    assert m.to_rows() == [[1, 1, 1, 0], [0, 1, 1, 1]]


def test_initial_cyclic_square_is_identity():
    m = initial_cyclic_matrix(5, 5)
    assert m.to_rows() == [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    assert all(m.row_weight(i) == 1 for i in range(5))


def test_initial_cyclic_8_5_structure_and_p3():
    m = initial_cyclic_matrix(8, 5)
    for i in range(5):
        assert m.row_support(i) == frozenset(range(i, i + 4))
    ok, witness = check_p3_bruteforce(m)
    assert ok and witness is None


def test_initial_cyclic_rejects_bad_dims():
    with pytest.raises(ValueError):
        initial_cyclic_matrix(3, 5)
    with pytest.raises(ValueError):
        initial_cyclic_matrix(4, 0)


def test_column_weights(p_counterexample):
    assert column_weights(p_counterexample) == [3, 2, 2, 2, 3, 3, 3, 2]
    all_ones = SupportMatrix.from_rows([[1] * 4 for _ in range(3)])
    assert column_weights(all_ones) == [3, 3, 3, 3]
    assert column_weights(initial_cyclic_matrix(4, 2)) == [1, 2, 2, 1]


def test_check_p1(p_counterexample):
    assert check_p1(p_counterexample)
    for n, k in [(4, 2), (8, 5), (6, 6)]:
        assert check_p1(initial_cyclic_matrix(n, k))
    assert not check_p1(SupportMatrix.from_rows([[1] * 4 for _ in range(2)]))


def test_check_p2(p_counterexample):
    assert check_p2(p_counterexample)
    # cyclic (8,5) weights are 1,2,3,4,4,3,2,1: spread 3
    assert column_weights(initial_cyclic_matrix(8, 5)) == [1, 2, 3, 4, 4, 3, 2, 1]
    assert not check_p2(initial_cyclic_matrix(8, 5))
    assert check_p2(initial_cyclic_matrix(4, 4))


def test_p3_bruteforce_counterexample_witness(p_counterexample):
    ok, witness = check_p3_bruteforce(p_counterexample)
    assert not ok
    assert witness.violating_rows == (0, 1, 2)
    assert witness.union_size == 5
    assert witness.required == 6


def test_p3_bruteforce_cyclic_all_small():
    for n in range(1, 13):
        for k in range(1, n + 1):
            ok, _ = check_p3_bruteforce(initial_cyclic_matrix(n, k))
            assert ok, (n, k)


def test_p3_single_row():
    m = SupportMatrix.from_rows([[1] * 6])
    ok, _ = check_p3_bruteforce(m)
    assert ok


def test_p3_matching_examples(p_counterexample):
    ok, witness = check_p3_matching(p_counterexample)
    assert not ok
    # the witness must genuinely violate the cover condition
    union = frozenset().union(*(p_counterexample.row_support(i) for i in witness.violating_rows))
    assert len(union) == witness.union_size
    assert witness.union_size < witness.required
    ok, _ = check_p3_matching(initial_cyclic_matrix(8, 5))
    assert ok
    ok, _ = check_p3_matching(initial_cyclic_matrix(6, 6))
    assert ok


def test_p3_matching_requires_p1():
    m = SupportMatrix.from_rows([[1, 1, 1], [1, 1, 1]])
    with pytest.raises(ValueError):
        check_p3_matching(m)


def test_max_matching_examples():
    g = BipartiteGraph(2, 2, [[0, 1], [0, 1]])
    size, pairing = max_bipartite_matching(g)
    assert size == 2
    assert sorted(pairing) == [0, 1]
    g = BipartiteGraph(1, 3, [[0, 1, 2]])
    assert max_bipartite_matching(g)[0] == 1
    g = BipartiteGraph(2, 1, [[0], [0]])
    assert max_bipartite_matching(g)[0] == 1


def test_matching_pairing_is_valid():
    rng = random.Random(5)
    for _ in range(100):
        nl = rng.randrange(1, 6)
        nr = rng.randrange(1, 6)
        adj = [
            sorted({rng.randrange(nr) for _ in range(rng.randrange(nr + 1))})
            for _ in range(nl)
        ]
        g = BipartiteGraph(nl, nr, adj)
        size, pairing = max_bipartite_matching(g)
        used = [v for v in pairing if v != -1]
        assert len(used) == len(set(used)) == size
        for u, v in enumerate(pairing):
            if v != -1:
                assert v in adj[u]


def test_hall_columns_examples(p_counterexample):
    assert not check_hall_columns(p_counterexample)
    assert check_hall_columns(initial_cyclic_matrix(6, 3))
    assert check_hall_columns(initial_cyclic_matrix(4, 4))


def test_all_k_subsets_matchable_examples(p_counterexample):
    assert not check_all_k_subsets_matchable(p_counterexample)
    assert check_all_k_subsets_matchable(initial_cyclic_matrix(5, 2))
    assert check_all_k_subsets_matchable(initial_cyclic_matrix(4, 4))


def test_oracle_equivalences_random_corpus():
    """The three (P3) formulations agree on random matrices, and the
    polynomial matching check agrees wherever its precondition holds."""
    rng = random.Random(2024)
    for _ in range(400):
        k = rng.randrange(1, 8)
        n = rng.randrange(k, 13)
        m = random_matrix(rng, k, n, rng.choice([0.3, 0.5, 0.7, 0.9]))
        brute, witness = check_p3_bruteforce(m)
        assert brute == check_hall_columns(m)
        if comb(n, k) <= 10**4:
            assert brute == check_all_k_subsets_matchable(m)
        if check_p1(m):
            ok, mwitness = check_p3_matching(m)
            assert ok == brute
            if not ok:
                union = frozenset().union(*(m.row_support(i) for i in mwitness.violating_rows))
                assert len(union) == mwitness.union_size < mwitness.required
        if witness is not None:
            union = frozenset().union(*(m.row_support(i) for i in witness.violating_rows))
            assert len(union) == witness.union_size < witness.required


def test_column_weight_sum_under_p1():
    for n in range(1, 10):
        for k in range(1, n + 1):
            m = initial_cyclic_matrix(n, k)
            assert sum(column_weights(m)) == k * (n - k + 1)


def test_sm_roundtrip(p_counterexample):
    text = format_sm(p_counterexample)
    assert parse_sm(text) == p_counterexample
    assert text.splitlines()[0] == "5 8"


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "2\n10\n01",
        "2 3\n101\n01",  # ragged
        "2 3\n101\n01x",  # foreign character
        "2 3\n101",  # missing row
        "a b\n10\n01",
    ],
)
def test_sm_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_sm(bad)
