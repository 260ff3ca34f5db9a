from collections import Counter

import pytest
from hypothesis import given, strategies as st

from conftest import element_pairs, elements, ranks
from nilcox.affine_perm import (
    AffinePerm,
    apply,
    core_to_k_bounded,
    elements_of_length,
    elements_up_to,
    from_word,
    grassmannian_elements,
    grassmannian_factorize,
    grassmannian_to_core,
    grassmannian_to_partition,
    hook_lengths,
    identity,
    inverse,
    is_core,
    k_bounded_to_core,
    left_descents,
    multiply,
    parse_element,
    partition_to_grassmannian,
    reduced_word,
    right_descents,
    simple,
    transposition,
)
from nilcox.combinat import k_bounded_partitions


def brute_length(w: AffinePerm) -> int:
    # inversions (i, j) with 1 <= i <= n, i < j, w(i) > w(j); j is bounded by the window spread
    n = w.n
    spread = max(w.window) - min(w.window)
    return sum(
        1
        for i in range(1, n + 1)
        for j in range(i + 1, i + n * (spread + 2))
        if w(i) > w(j)
    )


def test_simple_windows():
    assert simple(2, 0).window == (0, 2, 4)
    assert simple(2, 1).window == (2, 1, 3)
    assert from_word(2, [1, 0]).window == (0, 1, 5)


def test_window_validation():
    with pytest.raises(ValueError):
        AffinePerm(2, (1, 2, 2))
    with pytest.raises(ValueError):
        AffinePerm(2, (1, 2, 4))  # wrong sum
    with pytest.raises(ValueError):
        AffinePerm(2, (1, 4, 4))


def test_marking_example():
    y = from_word(2, [1, 2, 0])
    x = from_word(2, [0, 1, 2, 0])
    assert apply(y, 1) == -2 and apply(y, 4) == 1
    t = multiply(inverse(y), x)
    assert t == transposition(2, -4, 1) == transposition(2, -1, 4)


@given(elements())
def test_length_matches_inversion_count(w):
    assert w.length == brute_length(w)


@given(elements())
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == w.length
    assert from_word(w.k, word) == w


@given(element_pairs())
def test_product_is_composition_of_functions(pair):
    v, w = pair
    vw = multiply(v, w)
    assert all(vw(i) == v(w(i)) for i in range(-10, 11))


@given(elements())
def test_inverse(w):
    assert multiply(w, inverse(w)) == identity(w.k)
    assert inverse(w).length == w.length


@given(elements(max_word=6), elements(max_word=6), elements(max_word=6))
def test_associativity(a, b, c):
    if not a.k == b.k == c.k:
        return
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(elements())
def test_descents(w):
    for i in range(w.k + 1):
        s = simple(w.k, i)
        assert (i in left_descents(w)) == (multiply(s, w).length < w.length)
        assert (i in right_descents(w)) == (multiply(w, s).length < w.length)


@given(elements())
def test_grassmannian_factorization(w):
    grass, fin = grassmannian_factorize(w)
    assert grass.is_grassmannian and fin.is_finite
    assert multiply(grass, fin) == w
    assert grass.length + fin.length == w.length


def test_element_counts_by_length():
    counts = Counter(w.length for w in elements_up_to(3, 9))
    assert [counts[n] for n in range(10)] == [1, 4, 10, 20, 34, 52, 74, 100, 130, 164]


def count_k_bounded(n: int, k: int) -> int:
    # independent count: coefficient of q^n in prod_{i<=k} 1/(1-q^i)
    ways = [1] + [0] * n
    for part in range(1, k + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_grassmannian_count_equals_k_bounded_partitions(k):
    for n in range(9):
        assert len(grassmannian_elements(k, n)) == count_k_bounded(n, k)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_core_bijection_round_trips(k):
    for n in range(9):
        for lam in k_bounded_partitions(n, k):
            core = k_bounded_to_core(lam, k)
            assert is_core(core, k + 1)
            assert core_to_k_bounded(core, k) == lam
            w = partition_to_grassmannian(lam, k)
            assert w.length == n and w.is_grassmannian
            assert grassmannian_to_partition(w) == lam
            assert grassmannian_to_core(w) == core


def test_small_grassmannian_words():
    assert reduced_word(partition_to_grassmannian((2,), 2)) == (1, 0)
    assert reduced_word(partition_to_grassmannian((1, 1), 2)) == (2, 0)


def test_hook_lengths():
    assert hook_lengths((2, 1)) == [[3, 1], [1]]
    assert not is_core((2, 1), 3)
    assert is_core((2, 1), 2)
    assert is_core((3, 1, 1), 3)  # hooks 5, 2, 1, 2, 1


def test_parse_element():
    assert parse_element(2, "e") == identity(2)
    assert parse_element(2, "1") == simple(2, 1)
    assert parse_element(2, "w:[0,2,4]") == simple(2, 0)
    assert parse_element(2, "0,1,2,0") == from_word(2, [0, 1, 2, 0])
    with pytest.raises(ValueError):
        parse_element(2, "3")


@given(elements())
def test_json_round_trip(w):
    assert AffinePerm.from_json(w.to_json()) == w


@given(ranks, st.integers(0, 5))
def test_elements_of_length_have_that_length(k, n):
    assert all(w.length == n for w in elements_of_length(k, n))
