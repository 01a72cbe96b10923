import random

import pytest

from cfrs import (
    Branching,
    BudgetError,
    branching_split,
    branching_state_count,
    build_containment,
    chains_from_linear,
    count_distinct_rows,
    dilworth_partition,
    exact_min_irreducible,
    exact_min_uncovered,
    gen_block_tree,
    gen_vc_reduction,
    irreducible_vertices,
    iter_branchings,
    linear_from_chains,
    split_to_branching,
    uncovered_pairs,
    validate_branching,
    verify_row_split,
)
from cfrs import identity_split
from cfrs.matrix import MatrixError
from cfrs.poset import partition_price

from tests.helpers import CROSSING_PAIR, NESTED_PAIR, k4, random_corpus

D_CROSS = build_containment(CROSSING_PAIR)
D_NEST = build_containment(NESTED_PAIR)


def enumerable(digraph, cap=1500):
    return branching_state_count(digraph) <= cap


def test_validate_branching():
    assert validate_branching(D_CROSS, Branching.empty(2)).ok
    bad = validate_branching(D_CROSS, Branching.from_arcs(2, [(0, 1)]))
    assert not bad.ok and "(0,1)" in bad.reason
    chains = dilworth_partition(build_containment(gen_block_tree(2, 3)))
    d = build_containment(gen_block_tree(2, 3))
    assert validate_branching(d, linear_from_chains(chains)).ok


def test_branching_encoding_rejects_double_tail():
    with pytest.raises(ValueError):
        Branching.from_arcs(3, [(0, 1), (0, 2)])


def test_uncovered_and_irreducible_empty_branching():
    pairs = uncovered_pairs(D_CROSS, Branching.empty(2))
    assert len(pairs) == 4 == sum(s.bit_count() for s in D_CROSS.supports)
    assert irreducible_vertices(D_CROSS, Branching.empty(2)) == {0, 1}


def test_uncovered_nested_with_arc():
    b = Branching.from_arcs(2, [(0, 1)])
    assert uncovered_pairs(D_NEST, b) == ((0, 0), (1, 1))
    assert irreducible_vertices(D_NEST, b) == {0, 1}


def test_uncovered_block_tree_optimal_branching():
    d = build_containment(gen_block_tree(3, 3))
    b = Branching(tuple(9 + v // 3 for v in range(9)) + (12, 12, 12) + (None,))
    assert validate_branching(d, b).ok
    assert len(uncovered_pairs(d, b)) == 9
    assert irreducible_vertices(d, b) == frozenset(range(9))


def test_branching_split_nested_examples():
    b = Branching.from_arcs(2, [(0, 1)])
    split = branching_split(NESTED_PAIR, b)
    assert split.matrix.rows == NESTED_PAIR.rows
    assert split.groups == ((0,), (1,))
    empty = branching_split(NESTED_PAIR, Branching.empty(2))
    assert empty.matrix.rows == ((1, 0), (0, 1), (0, 1))
    assert empty.groups == ((0, 1), (2,))


def test_branching_split_block_tree_optimal():
    m = gen_block_tree(3, 3)
    d = build_containment(m)
    b = Branching(tuple(9 + v // 3 for v in range(9)) + (12, 12, 12) + (None,))
    split = branching_split(m, b, d)
    assert split.matrix.m == 9
    assert count_distinct_rows(split.matrix) == 9
    assert verify_row_split(m, split).ok


def test_split_to_branching_identity():
    b = split_to_branching(NESTED_PAIR, identity_split(NESTED_PAIR))
    assert b.choice == (1, None)
    assert len(uncovered_pairs(D_NEST, b)) == 2


def test_split_to_branching_rejects_invalid():
    with pytest.raises(MatrixError):
        split_to_branching(CROSSING_PAIR, identity_split(CROSSING_PAIR))


def test_split_row_and_distinct_counts_match_branching_on_corpus():
    # every branching's split verifies conflict-free, has one row per
    # uncovered pair and one distinct row per irreducible vertex
    checked = 0
    for matrix in random_corpus(120, seed=13):
        d = build_containment(matrix)
        if not enumerable(d):
            continue
        for b in iter_branchings(d):
            split = branching_split(matrix, b, d)
            assert verify_row_split(matrix, split).ok
            assert split.matrix.m == len(uncovered_pairs(d, b))
            assert count_distinct_rows(split.matrix) == len(irreducible_vertices(d, b))
            checked += 1
    assert checked > 300


def test_round_trip_never_increases_uncovered_pairs():
    for matrix in random_corpus(40, seed=14):
        d = build_containment(matrix)
        if not enumerable(d, cap=200):
            continue
        for b in iter_branchings(d):
            split = branching_split(matrix, b, d)
            back = split_to_branching(matrix, split)
            assert len(uncovered_pairs(d, back)) <= len(uncovered_pairs(d, b))
            assert len(irreducible_vertices(d, back)) <= count_distinct_rows(split.matrix)


def test_adding_an_arc_only_shrinks_uncovered_pairs():
    rng = random.Random(15)
    for matrix in random_corpus(60, seed=15):
        d = build_containment(matrix)
        choice = list(Branching.empty(d.n).choice)
        # random partial branching
        for v in range(d.n):
            opts = d.out(v)
            if opts and rng.random() < 0.5:
                choice[v] = rng.choice(opts)
        base = Branching(tuple(choice))
        free = [v for v in range(d.n) if choice[v] is None and d.out(v)]
        if not free:
            continue
        v = rng.choice(free)
        choice[v] = rng.choice(d.out(v))
        grown = Branching(tuple(choice))
        assert set(uncovered_pairs(d, grown)) <= set(uncovered_pairs(d, base))


def test_exact_crossing_pair():
    assert exact_min_uncovered(D_CROSS)[1] == 4
    assert exact_min_irreducible(D_CROSS)[1] == 2


def test_exact_block_tree():
    d = build_containment(gen_block_tree(3, 3))
    branching, value = exact_min_uncovered(d)
    assert value == 9
    assert len(uncovered_pairs(d, branching)) == 9


def test_exact_vc_reduction_k4():
    d = build_containment(gen_vc_reduction(k4()))
    assert exact_min_uncovered(d)[1] == 35  # 8 * 4 + vertex cover 3


def test_exact_matches_full_enumeration_on_corpus():
    for matrix in random_corpus(60, seed=16):
        d = build_containment(matrix)
        if not enumerable(d, cap=400):
            continue
        best_rows = min(len(uncovered_pairs(d, b)) for b in iter_branchings(d))
        best_distinct = min(len(irreducible_vertices(d, b)) for b in iter_branchings(d))
        assert exact_min_uncovered(d)[1] == best_rows
        assert exact_min_irreducible(d)[1] == best_distinct


def test_exact_budget_error():
    d = build_containment(gen_block_tree(3, 3))
    with pytest.raises(BudgetError):
        exact_min_uncovered(d, budget=10)


def test_exact_is_deterministic():
    d = build_containment(gen_vc_reduction(k4()))
    first = exact_min_uncovered(d)
    assert exact_min_uncovered(d) == first


def test_linear_chain_bijection():
    assert linear_from_chains(((0,), (1,))).choice == (None, None)
    b = linear_from_chains(((0, 1),))
    assert b.choice == (1, None)
    assert chains_from_linear(b) == ((0, 1),)
    with pytest.raises(ValueError):
        chains_from_linear(Branching((2, 2, None)))


def test_linear_branchings_price_identity():
    # for any linear branching, the uncovered-pair count equals the price of
    # its chain partition under support-size weights
    for matrix in random_corpus(60, seed=17):
        d = build_containment(matrix)
        sizes = [s.bit_count() for s in d.supports]
        partition = dilworth_partition(d)
        b = linear_from_chains(partition)
        assert len(uncovered_pairs(d, b)) == partition_price(partition, sizes)
        assert chains_from_linear(b) == tuple(sorted(partition))
