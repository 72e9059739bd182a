import itertools
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vvmacdonald.combinatorics import (
    EQUAL,
    GREATER,
    INCOMPARABLE,
    LESS,
    LengthMismatch,
    all_compositions_upto,
    compositions,
    count_rsyt,
    format_composition,
    hook_lengths,
    inversion_number,
    is_partition,
    k_stat,
    max_hook,
    parse_composition,
    partitions,
    phi_inverse,
    phi_step,
    rank_vector,
    shape_stats,
    shapes,
    sort_desc,
    swap,
    transpose,
    triangle_compare,
    triangle_sort_key,
)

comps = st.lists(st.integers(0, 4), min_size=1, max_size=6).map(tuple)


def test_rank_vector_example():
    assert rank_vector((1, 2, 1, 4)) == (3, 2, 4, 1)
    assert inversion_number((1, 2, 1, 4)) == 4


def test_shape_stats_43():
    s = shape_stats((4, 3))
    assert s["transpose"] == (2, 2, 2, 1)
    assert s["max_hook"] == 5
    assert s["length"] == 2


def test_k_stat_and_phi():
    assert k_stat((2, 1, 0)) == 4
    assert phi_step((1, 0)) == (0, 2)
    with pytest.raises(ValueError):
        phi_inverse((1, 0))


def test_parse_format():
    assert parse_composition("0, 2,1") == (0, 2, 1)
    assert format_composition((0, 2, 1)) == "0,2,1"
    with pytest.raises(ValueError):
        parse_composition("1,-1")


@given(comps)
def test_rank_vector_sorts(alpha):
    r = rank_vector(alpha)
    N = len(alpha)
    assert sorted(r) == list(range(1, N + 1))
    lam = [None] * N
    for i, ri in enumerate(r):
        lam[ri - 1] = alpha[i]
    assert tuple(lam) == sort_desc(alpha)
    # stability: equal entries keep their left-to-right order
    for i in range(N):
        for j in range(i + 1, N):
            if alpha[i] == alpha[j]:
                assert r[i] < r[j]


@given(comps)
def test_inversion_number_bruteforce(alpha):
    n = sum(1 for i, j in itertools.combinations(range(len(alpha)), 2) if alpha[i] < alpha[j])
    assert inversion_number(alpha) == n


@given(comps)
def test_phi_roundtrip(alpha):
    assert phi_inverse(phi_step(alpha)) == alpha
    assert sum(phi_step(alpha)) == sum(alpha) + 1


@given(comps, st.integers(1, 5))
def test_swap_involution(alpha, i):
    if i >= len(alpha):
        return
    assert swap(swap(alpha, i), i) == alpha


def test_counts():
    for N in range(1, 5):
        for n in range(5):
            assert len(list(compositions(n, N))) == comb(n + N - 1, N - 1)
    assert [len(list(partitions(n, n))) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]
    assert len(list(all_compositions_upto(2, 3))) == 1 + 3 + 6


def test_hook_formula_vs_bruteforce():
    # count standard fillings directly for N <= 6
    def brute(tau):
        cells = [(i, j) for i, r in enumerate(tau) for j in range(r)]
        n = 0
        for perm in itertools.permutations(range(len(cells))):
            val = dict(zip(cells, perm))
            if all(val[(i, j)] < val[(i, j + 1)] for (i, j) in cells if (i, j + 1) in val) and \
                    all(val[(i, j)] < val[(i + 1, j)] for (i, j) in cells if (i + 1, j) in val):
                n += 1
        return n

    for N in range(1, 6):
        for tau in shapes(N):
            assert count_rsyt(tau) == brute(tau)
    assert sum(count_rsyt(tau) ** 2 for tau in shapes(6)) == factorial(6)


def test_hooks():
    assert max_hook((2, 1)) == 3 and max_hook((2, 2)) == 3
    assert hook_lengths((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert transpose(transpose((4, 2, 1))) == (4, 2, 1)


def test_triangle_order():
    assert triangle_compare((2, 0), (1, 1)) == GREATER
    assert triangle_compare((0, 2), (2, 0)) == LESS
    assert triangle_compare((1, 0), (0, 2)) == INCOMPARABLE
    assert triangle_compare((1, 1), (1, 1)) == EQUAL
    with pytest.raises(LengthMismatch):
        triangle_compare((1,), (1, 0))


@given(comps, comps)
def test_sort_key_extends_order(a, b):
    if len(a) != len(b):
        return
    c = triangle_compare(a, b)
    if c == GREATER:
        assert triangle_sort_key(a) > triangle_sort_key(b)
    elif c == LESS:
        assert triangle_sort_key(a) < triangle_sort_key(b)


def test_partitions_are_partitions():
    for lam in partitions(5, 3):
        assert is_partition(lam) and len(lam) == 3
