import pytest
from hypothesis import given, strategies as st

from nilcox.affine_perm import elements_up_to, from_word, partition_to_grassmannian
from nilcox.combinat import k_bounded_partitions
from nilcox.fomin_stanley import (
    BExpansion,
    b_basis,
    cyclically_decreasing,
    cyclically_decreasing_elements,
    degree_data,
    expand_in_b_basis,
    from_b_basis,
    h,
    h_lambda,
    hat_extend,
    is_in_B,
    kschur_expansion,
    noncomm_kschur,
)
from nilcox.nilcoxeter import NilCoxElem, basis, u


def test_cyclically_decreasing_words():
    assert cyclically_decreasing(2, {0, 1}).word() in ((1, 0),)
    assert cyclically_decreasing(2, {2, 0}) == from_word(2, [0, 2])
    assert cyclically_decreasing(3, {3, 0, 1}) == from_word(3, [1, 0, 3])
    with pytest.raises(ValueError):
        cyclically_decreasing(2, {0, 1, 2})


@pytest.mark.parametrize("k", [2, 3, 4])
def test_cyclically_decreasing_count_and_length(k):
    from math import comb

    for i in range(k + 1):
        elems = cyclically_decreasing_elements(k, i)
        assert len(set(elems)) == comb(k + 1, i)
        assert all(w.length == i for w in elems)


def test_h_examples():
    assert h(2, 1) == u(2, [0]) + u(2, [1]) + u(2, [2])
    assert h(2, 2) == u(2, [1, 0]) + u(2, [2, 1]) + u(2, [0, 2])
    assert h(2, 3) == 0


@pytest.mark.parametrize("k", [2, 3, 4])
def test_h_commute(k):
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            assert h(k, i) * h(k, j) == h(k, j) * h(k, i)


def test_small_kschur():
    assert noncomm_kschur(2, (1, 1)) == u(2, [2, 0]) + u(2, [0, 1]) + u(2, [1, 2])
    assert noncomm_kschur(2, (2,)) == h(2, 2)
    assert degree_data(2, 2).kschur_to_h[(1, 1)] == {(1, 1): 1, (2,): -1}


@pytest.mark.parametrize("k", [2, 3])
def test_unique_grassmannian_term(k):
    for n in range(7):
        for lam in k_bounded_partitions(n, k):
            s = noncomm_kschur(k, lam)
            grass = {w: c for w, c in s.items() if w.is_grassmannian}
            assert grass == {partition_to_grassmannian(lam, k): 1}


@pytest.mark.parametrize("k", [2, 3])
def test_transition_matrices_are_inverse(k):
    for n in range(7):
        d = degree_data(k, n)
        for lam in d.partitions:
            row = BExpansion(k, "h", {lam: 1}).to_basis("kschur").to_basis("h")
            assert row.coeffs == {lam: 1}


def test_membership():
    assert is_in_B(h_lambda(2, (2, 1)))[0]
    assert not is_in_B(u(2, [0]))[0]
    exp = kschur_expansion(h_lambda(2, (1, 1)))
    assert exp.coeffs == {(1, 1): 1, (2,): 1}
    with pytest.raises(ValueError):
        kschur_expansion(u(2, [0]))


@pytest.mark.parametrize("k", [2, 3])
def test_b_basis_leading_term_and_expansion(k):
    for w in elements_up_to(k, 5):
        b = b_basis(w)
        assert b.coeff(w) == 1
        assert expand_in_b_basis(b) == {w: 1}


@given(st.lists(st.tuples(st.integers(0, 2), st.lists(st.integers(0, 2), max_size=5)), max_size=4))
def test_b_basis_round_trip(data):
    a = NilCoxElem(2, {from_word(2, word): c for c, word in data if c})
    assert from_b_basis(2, expand_in_b_basis(a)) == a


def test_hat_extend_identity_is_identity():
    ident = lambda lam: {lam: 1}
    for w in elements_up_to(2, 5):
        assert hat_extend(ident, basis(w)) == basis(w)


def test_hat_extend_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        hat_extend(lambda lam: {lam: 1, (): 1}, basis(from_word(2, [1, 0])))
