import random
from collections import Counter
from itertools import product

import pytest
from hypothesis import given

from conftest import small_compositions
from nilcox.affine_perm import elements_up_to, from_word, identity, partition_to_grassmannian
from nilcox.combinat import compositions, k_bounded_partitions, partitions
from nilcox.fomin_stanley import kschur_expansion, noncomm_kschur
from nilcox.nilcoxeter import basis
from nilcox.pieri_ops import D_comp
from nilcox.symfunc import (
    NotSymmetric,
    SymFunc,
    affine_stanley,
    dual_kschur_expand,
    dual_kschur_to_m,
    F_to_M,
    h_to_m_matrix,
    kostka,
    kschur_to_h,
    M_to_m_if_symmetric,
    m_product,
    m_to_h_matrix,
    ribbon_in_h,
    ribbon_in_h_closed,
    skew_kschur,
    strong_schur,
    strong_schur_F,
    strong_schur_h,
    strong_schur_kschur,
    strong_schur_m,
    strong_schur_partitions,
    SYMFUNC_SWEEPS,
)


def test_symfunc_validation():
    with pytest.raises(ValueError):
        SymFunc("m", 3, {(1, 2): 1})
    with pytest.raises(ValueError):
        SymFunc("m", 3, {(2,): 1})
    with pytest.raises(ValueError):
        SymFunc("q", 1, {})
    assert SymFunc("M", 3, {(1, 2): 0}).coeffs == {}


def test_json_round_trip_and_pretty():
    f = SymFunc("F", 3, {(1, 2): 2, (3,): -1})
    assert SymFunc.from_json(f.to_json()) == f
    assert f.pretty() == "-F[3] + 2F[1,2]"
    assert "\\overline{s}" in SymFunc("dual_kschur", 1, {(1,): 1}).pretty(latex=True)


def test_F_to_M():
    assert F_to_M(SymFunc("F", 2, {(2,): 1})) == SymFunc("M", 2, {(2,): 1, (1, 1): 1})
    assert M_to_m_if_symmetric(F_to_M(SymFunc("F", 1, {(1,): 1}))) == SymFunc("m", 1, {(1,): 1})


def test_not_symmetric():
    with pytest.raises(NotSymmetric):
        M_to_m_if_symmetric(SymFunc("M", 3, {(2, 1): 1}))


def test_kostka():
    assert kostka((2, 1), (1, 1, 1)) == 2
    for n in range(6):
        for lam in partitions(n):
            assert kostka(lam, lam) == 1
    with pytest.raises(ValueError):
        kostka((2,), (1,))


@pytest.mark.parametrize("n", range(7))
def test_h_to_m_equals_kostka_product(n):
    # h_mu = sum_lam K_{lam mu} s_lam and s_lam = sum_nu K_{lam nu} m_nu
    L = h_to_m_matrix(n)
    parts = partitions(n)
    for mu in parts:
        for nu in parts:
            oracle = sum(kostka(lam, mu) * kostka(lam, nu) for lam in parts)
            assert L[mu].get(nu, 0) == oracle


@pytest.mark.parametrize("n", range(7))
def test_m_to_h_is_inverse(n):
    L, Linv = h_to_m_matrix(n), m_to_h_matrix(n)
    for a in partitions(n):
        row = Counter()
        for b, x in Linv[a].items():
            for c, y in L[b].items():
                row[c] += x * y
        assert {c: v for c, v in row.items() if v} == {a: 1}


def monomial_poly(lam, nvars):
    # oracle: m_lam as an explicit polynomial in nvars variables
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return {e: 1 for e in set(product(*[padded] * nvars)) if sorted(e) == sorted(padded)}


def poly_mul(p, q):
    out = Counter()
    for a, x in p.items():
        for b, y in q.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return out


@pytest.mark.parametrize("lam,mu", [((1,), (1,)), ((2,), (1,)), ((1, 1), (1,)), ((2, 1), (1, 1)), ((2,), (2, 1)), ((1, 1), (1, 1))])
def test_m_product_against_polynomials(lam, mu):
    n = sum(lam) + sum(mu)
    prod = poly_mul(monomial_poly(lam, n), monomial_poly(mu, n))
    expected = {nu: prod[nu + (0,) * (n - len(nu))] for nu in partitions(n)}
    assert m_product(lam, mu) == SymFunc("m", n, expected)


def test_ribbon_examples():
    assert ribbon_in_h((3,)) == SymFunc("h", 3, {(3,): 1})
    assert ribbon_in_h((1, 1)) == SymFunc("h", 2, {(1, 1): 1, (2,): -1})
    h11 = kschur_expansion(noncomm_kschur(2, (1, 1))).to_basis("h")
    assert ribbon_in_h((1, 1)).coeffs == h11.coeffs


@given(small_compositions)
def test_ribbon_recursion_matches_closed_formula(J):
    assert ribbon_in_h(J) == ribbon_in_h_closed(J)


def test_affine_stanley_examples():
    assert affine_stanley(identity(2)) == SymFunc("m", 0, {(): 1})
    assert affine_stanley(from_word(2, [1, 0])) == SymFunc("m", 2, {(2,): 1, (1, 1): 1})


def test_affine_stanley_of_any_w_expands_by_kschur_coefficients():
    for w in elements_up_to(2, 5):
        got = dual_kschur_expand(affine_stanley(w), 2)
        expected = {lam: noncomm_kschur(2, lam).coeff(w) for lam in k_bounded_partitions(w.length, 2)}
        assert got == SymFunc("dual_kschur", w.length, expected)


@pytest.mark.parametrize("k", [2, 3])
def test_dual_kschur_basis_elements(k):
    for n in range(6):
        for lam in k_bounded_partitions(n, k):
            assert dual_kschur_expand(affine_stanley(partition_to_grassmannian(lam, k)), k).coeffs == {lam: 1}


def test_dual_kschur_round_trip_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 6)
        parts = k_bounded_partitions(n, 2)
        coeffs = {lam: rng.randint(-5, 5) for lam in rng.sample(parts, rng.randint(1, len(parts)))}
        f = SymFunc("dual_kschur", n, coeffs)
        assert dual_kschur_expand(dual_kschur_to_m(f, 2), 2) == f


def test_dual_kschur_quotient_drops_large_parts():
    f = affine_stanley(partition_to_grassmannian((2, 1), 2)) + SymFunc("m", 3, {(3,): 5})
    assert dual_kschur_expand(SymFunc("m", 3, {(3,): 5}), 2).coeffs == {}
    assert dual_kschur_expand(f, 2).coeffs == {(2, 1): 1}


def test_strong_trivial_cases():
    w = from_word(2, [1, 0])
    assert strong_schur_F(w, w) == SymFunc("F", 0, {(): 1})
    assert strong_schur_F(identity(2), w).coeffs == {}
    assert strong_schur_m(from_word(2, [0]), from_word(2, [1])).coeffs == {}


def test_strong_of_grassmannian_is_kschur():
    u = partition_to_grassmannian((2,), 2)
    m = M_to_m_if_symmetric(F_to_M(strong_schur_F(u, identity(2))))
    assert strong_schur_h(u, identity(2)) == kschur_to_h(SymFunc("kschur", 2, {(2,): 1}), 2)
    assert m == strong_schur_m(u, identity(2))


def test_F_coefficients_are_D_comp_coefficients():
    for u in elements_up_to(2, 5):
        for m in range(1, u.length + 1):
            for J in compositions(m):
                image = D_comp(J, basis(u))
                for v, c in image.items():
                    assert strong_schur_F(u, v)[J] == c


@pytest.mark.parametrize("k", [2, 3])
def test_strong_expansions_agree(k):
    for u in elements_up_to(k, 4):
        for v in elements_up_to(k, u.length):
            m = strong_schur(u, v, "m")
            assert strong_schur(u, v, "M") == F_to_M(strong_schur_F(u, v))
            if strong_schur_F(u, v).coeffs:
                assert M_to_m_if_symmetric(F_to_M(strong_schur_F(u, v))) == m
            assert all(max(lam, default=0) <= k for lam in strong_schur_h(u, v).coeffs)
            assert kschur_to_h(strong_schur_kschur(u, v), k) == strong_schur_h(u, v)


def test_skew_kschur_trivial():
    assert skew_kschur((2, 1), (), 2) == SymFunc("kschur", 3, {(2, 1): 1})
    assert skew_kschur((2, 1), (2, 1), 2) == SymFunc("kschur", 0, {(): 1})
    assert skew_kschur((1,), (2,), 2).coeffs == {}
    assert strong_schur_partitions((2, 1), (1,), 2) == skew_kschur((2, 1), (1,), 2)


@pytest.mark.parametrize("name", sorted(SYMFUNC_SWEEPS))
def test_symfunc_sweeps_small(name):
    rep = SYMFUNC_SWEEPS[name](2, 5)
    assert rep.passed, rep.failures[:3]
