"""Cyclically decreasing elements, the generators h_i and the subalgebra B.

Noncommutative k-Schur functions are obtained by inverting the matrix
``M[lam][mu] = <h_lam, u_{w_mu}>`` (Grassmannian coefficients of h_lam), which
is unitriangular: ``h_lam = sum_mu M[lam][mu] s_mu`` so ``s = M^{-1} h``.
Everything is computed one degree at a time and memoized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Mapping

from . import linalg
from .affine_perm import (
    AffinePerm,
    from_word,
    grassmannian_factorize,
    grassmannian_to_partition,
    partition_to_grassmannian,
)
from .combinat import Partition, check_k_bounded, k_bounded_partitions
from .nilcoxeter import NilCoxElem, basis, right_multiply_basis, scalar, zero


def _cyclic_runs(k: int, subset: frozenset[int]) -> list[list[int]]:
    n = k + 1
    runs = []
    for start in sorted(subset):
        if (start - 1) % n in subset:
            continue
        run = [start]
        while (run[-1] + 1) % n in subset:
            run.append((run[-1] + 1) % n)
        runs.append(run)
    return runs


def cyclically_decreasing(k: int, subset: Iterable[int]) -> AffinePerm:
    """The unique cyclically decreasing element with letters ``subset``.

    Each maximal cyclic run a, a+1, ..., b (mod k+1) is written s_b ... s_a.
    """
    return _cyclically_decreasing(k, frozenset(subset))


@lru_cache(maxsize=None)
def _cyclically_decreasing(k: int, subset: frozenset[int]) -> AffinePerm:
    if not subset <= set(range(k + 1)):
        raise ValueError(f"residues must lie in 0..{k}: {sorted(subset)}")
    if len(subset) == k + 1:
        raise ValueError("the full residue set has no cyclically decreasing element")
    word = [i for run in _cyclic_runs(k, subset) for i in reversed(run)]
    w = from_word(k, word)
    assert w.length == len(subset)
    return w


@lru_cache(maxsize=None)
def cyclically_decreasing_elements(k: int, size: int) -> tuple[AffinePerm, ...]:
    if not 0 <= size <= k:
        return ()
    return tuple(cyclically_decreasing(k, d) for d in combinations(range(k + 1), size))


@lru_cache(maxsize=None)
def h(k: int, i: int) -> NilCoxElem:
    """``h_i``: the sum of u_{w_D} over residue sets D of size i (zero when i < 0 or i > k)."""
    if i < 0 or i > k:
        return zero(k)
    return NilCoxElem(k, {w: 1 for w in cyclically_decreasing_elements(k, i)})


def h_lambda(k: int, lam: Iterable[int]) -> NilCoxElem:
    return _h_lambda(k, check_k_bounded(tuple(lam), k))


@lru_cache(maxsize=None)
def _h_lambda(k: int, lam: Partition) -> NilCoxElem:
    if not lam:
        return scalar(k)
    return h(k, lam[0]) * _h_lambda(k, lam[1:])


def h_product(k: int, parts: Iterable[int]) -> NilCoxElem:
    """Ordered product h_{p_1} ... h_{p_r} for any sequence (no sorting)."""
    out = scalar(k)
    for p in reversed(list(parts)):
        out = h(k, p) * out
    return out


@dataclass(frozen=True)
class DegreeData:
    """Transition data between h_lam and s^(k)_lam in one degree."""

    k: int
    n: int
    partitions: tuple[Partition, ...]
    grass: dict[Partition, AffinePerm]
    # h_lam = sum_mu h_to_kschur[lam][mu] s_mu  (the k-Kostka numbers)
    h_to_kschur: dict[Partition, dict[Partition, int]]
    # s_lam = sum_mu kschur_to_h[lam][mu] h_mu
    kschur_to_h: dict[Partition, dict[Partition, int]]
    order: list[Partition] = field(default_factory=list)


@lru_cache(maxsize=None)
def degree_data(k: int, n: int) -> DegreeData:
    parts = k_bounded_partitions(n, k)
    grass = {lam: partition_to_grassmannian(lam, k) for lam in parts}
    matrix = {}
    for lam in parts:
        hl = _h_lambda(k, lam)
        matrix[lam] = {mu: hl.coeff(grass[mu]) for mu in parts if hl.coeff(grass[mu])}
    order = linalg.triangular_order(matrix, parts)
    inv = {lam: linalg.solve_row(matrix, {lam: 1}, order) for lam in parts}
    return DegreeData(k, n, parts, grass, matrix, inv, order)


def noncomm_kschur(k: int, lam: Iterable[int]) -> NilCoxElem:
    return _noncomm_kschur(k, check_k_bounded(tuple(lam), k))


@lru_cache(maxsize=None)
def _noncomm_kschur(k: int, lam: Partition) -> NilCoxElem:
    data = degree_data(k, sum(lam))
    out = zero(k)
    for mu, c in data.kschur_to_h[lam].items():
        out = out + _h_lambda(k, mu).scale(c)
    return out


# --- expansions inside B ------------------------------------------------------


@dataclass
class BExpansion:
    """Coordinates of an element of B in the ``h`` or ``kschur`` basis."""

    k: int
    basis: str
    coeffs: dict[Partition, int]

    def __post_init__(self):
        if self.basis not in ("h", "kschur"):
            raise ValueError(f"unknown basis {self.basis!r}")
        self.coeffs = {tuple(lam): c for lam, c in self.coeffs.items() if c}
        for lam in self.coeffs:
            check_k_bounded(lam, self.k)

    def to_elem(self) -> NilCoxElem:
        build = _h_lambda if self.basis == "h" else _noncomm_kschur
        out = zero(self.k)
        for lam, c in self.coeffs.items():
            out = out + build(self.k, lam).scale(c)
        return out

    def to_basis(self, target: str) -> BExpansion:
        if target == self.basis:
            return BExpansion(self.k, target, dict(self.coeffs))
        acc: dict[Partition, int] = {}
        for lam, c in self.coeffs.items():
            data = degree_data(self.k, sum(lam))
            row = data.h_to_kschur[lam] if self.basis == "h" else data.kschur_to_h[lam]
            for mu, x in row.items():
                acc[mu] = acc.get(mu, 0) + c * x
        return BExpansion(self.k, target, acc)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "k": self.k,
            "coeffs": [{"index": list(lam), "coeff": c} for lam, c in self.sorted_items()],
        }


def is_in_B(a: NilCoxElem) -> tuple[bool, BExpansion | None]:
    """Membership test in B; on success also return the k-Schur expansion.

    A member equals the combination of s^(k)_lam weighted by its coefficients
    on Grassmannian terms, so that candidate is formed and compared with ``a``.
    """
    coeffs: dict[Partition, int] = {}
    for w, c in a.items():
        if w.is_grassmannian:
            coeffs[grassmannian_to_partition(w)] = c
    candidate = BExpansion(a.k, "kschur", coeffs)
    if candidate.to_elem() == a:
        return True, candidate
    return False, None


def kschur_expansion(a: NilCoxElem) -> BExpansion:
    ok, exp = is_in_B(a)
    if not ok:
        raise ValueError("element does not lie in the Fomin-Stanley subalgebra")
    return exp


# --- the b_w basis ------------------------------------------------------------


def b_basis(w: AffinePerm) -> NilCoxElem:
    """``b_w = s^(k)_lam u_{w_(0)}`` where ``w = w_lam w_(0)``."""
    return _b_basis(w)


@lru_cache(maxsize=None)
def _b_basis(w: AffinePerm) -> NilCoxElem:
    grass, fin = grassmannian_factorize(w)
    lam = grassmannian_to_partition(grass)
    return right_multiply_basis(_noncomm_kschur(w.k, lam), fin)


def _b_key(w: AffinePerm):
    grass, _ = grassmannian_factorize(w)
    return (w.length, grass.length, w.window)


def expand_in_b_basis(a: NilCoxElem) -> dict[AffinePerm, int]:
    """Coefficients c_w with ``a = sum c_w b_w``.

    The leading term of b_w is u_w for the order (length, length of the
    Grassmannian part), so peeling off the largest term each step terminates.
    """
    rest = dict(a.items())
    out: dict[AffinePerm, int] = {}
    while rest:
        w = max(rest, key=_b_key)
        c = rest[w]
        out[w] = c
        for v, x in _b_basis(w).items():
            val = rest.get(v, 0) - c * x
            if val:
                rest[v] = val
            else:
                rest.pop(v, None)
    return out


def from_b_basis(k: int, coeffs: Mapping[AffinePerm, int]) -> NilCoxElem:
    out = zero(k)
    for w, c in coeffs.items():
        out = out + _b_basis(w).scale(c)
    return out


KschurMap = Callable[[Partition], Mapping[Partition, int]]


def hat_extend(f: KschurMap, a: NilCoxElem) -> NilCoxElem:
    """Extend a linear map on B (given on the k-Schur basis) to all of A.

    ``f(lam)`` returns the k-Schur coordinates of f(s^(k)_lam); the extension
    sends ``b_w = s^(k)_lam u_{w_(0)}`` to ``f(s^(k)_lam) u_{w_(0)}``.
    """
    k = a.k
    acc: dict[AffinePerm, int] = {}
    cache: dict[Partition, NilCoxElem] = {}
    for w, c in expand_in_b_basis(a).items():
        grass, fin = grassmannian_factorize(w)
        lam = grassmannian_to_partition(grass)
        if lam not in cache:
            image = f(lam)
            degrees = {sum(mu) for mu in image}
            if len(degrees) > 1:
                raise ValueError(f"image of s_{lam} is not homogeneous: degrees {sorted(degrees)}")
            cache[lam] = BExpansion(k, "kschur", dict(image)).to_elem()
        for v, x in right_multiply_basis(cache[lam], fin).items():
            acc[v] = acc.get(v, 0) + c * x
    return NilCoxElem(k, acc)


def basis_elem(w: AffinePerm) -> NilCoxElem:
    return basis(w)
