"""Exact symmetric and quasisymmetric function expansions.

Supported bases: ``m`` and ``h`` (indexed by partitions), ``M`` and ``F``
(indexed by compositions), ``kschur`` (k-Schur, in Lambda_(k)) and
``dual_kschur`` (affine Schur, in the quotient Lambda^(k)).

The quotient Lambda^(k) is modelled degree by degree by dropping m_lam with
lam_1 > k. Perp operators act on Lambda_(k) in the h basis through the
coproduct ``h_r^perp(h_a1 ... h_al) = sum_{r1+..+rl=r} prod h_{ai - ri}``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .affine_perm import AffinePerm, elements_up_to, grassmannian_to_partition, partition_to_grassmannian
from .combinat import (
    Composition,
    Partition,
    check_k_bounded,
    coarsenings,
    compositions,
    is_k_bounded,
    k_bounded_partitions,
    partitions,
    refinements,
    sort_partition,
)
from .fomin_stanley import BExpansion, degree_data, h, h_lambda, hat_extend, kschur_expansion, noncomm_kschur
from .nilcoxeter import basis
from .pieri_ops import D_comp, D_pow, OperatorReport
from .strip_graphs import paths_by_ascomp, weak_strip_targets

BASES = ("m", "h", "M", "F", "kschur", "dual_kschur")
_PARTITION_BASES = ("m", "h", "kschur", "dual_kschur")


class NotSymmetric(ValueError):
    """Raised when an M-expansion is not constant on rearrangement classes."""


@dataclass
class SymFunc:
    basis: str
    degree: int
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for idx, c in self.coeffs.items():
            idx = tuple(idx)
            if sum(idx) != self.degree:
                raise ValueError(f"index {idx} does not have degree {self.degree}")
            if self.basis in _PARTITION_BASES and list(idx) != sorted(idx, reverse=True):
                raise ValueError(f"basis {self.basis} is indexed by partitions, got {idx}")
            if any(p <= 0 for p in idx):
                raise ValueError(f"index parts must be positive: {idx}")
            if c:
                clean[idx] = clean.get(idx, 0) + c
        self.coeffs = {i: c for i, c in clean.items() if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            return False
        if not self.coeffs and not other.coeffs:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other: SymFunc) -> SymFunc:
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("can only add expansions in the same basis and degree")
        acc = Counter(self.coeffs)
        acc.update(other.coeffs)
        return SymFunc(self.basis, self.degree, dict(acc))

    def scale(self, c: int) -> SymFunc:
        return SymFunc(self.basis, self.degree, {i: c * x for i, x in self.coeffs.items()})

    def __getitem__(self, idx) -> int:
        return self.coeffs.get(tuple(idx), 0)

    def sorted_items(self):
        if self.basis in ("M", "F"):
            key = lambda kv: (len(kv[0]), kv[0])
        else:
            key = lambda kv: tuple(-x for x in kv[0])
        return sorted(self.coeffs.items(), key=key)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "coeffs": [{"index": list(i), "coeff": c} for i, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SymFunc:
        return cls(data["basis"], int(data["degree"]),
                   {tuple(t["index"]): int(t["coeff"]) for t in data["coeffs"]})

    def pretty(self, latex: bool = False) -> str:
        if not self.coeffs:
            return "0"
        symbol = {"m": "m", "h": "h", "M": "M", "F": "F", "kschur": "s^(k)", "dual_kschur": "sbar"}[self.basis]
        if latex:
            symbol = {"m": "m", "h": "h", "M": "M", "F": "F",
                      "kschur": "s^{(k)}", "dual_kschur": "\\overline{s}"}[self.basis]
        parts = []
        for idx, c in self.sorted_items():
            if self.basis in ("M", "F"):
                label = "[" + ",".join(map(str, idx)) + "]"
            else:
                label = "(" + ",".join(map(str, idx)) + ")"
            term = f"{symbol}_{{{label}}}" if latex else f"{symbol}{label}"
            coef = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(("- " if c < 0 else "+ ") + coef + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self) -> str:
        return f"SymFunc({self.basis}, deg {self.degree}: {self.pretty()})"


def one() -> SymFunc:
    return SymFunc("m", 0, {(): 1})


# --- quasisymmetric -> symmetric ---------------------------------------------------


def F_to_M(f: SymFunc) -> SymFunc:
    """Rewrite via F_J = sum of M_I over refinements I of J."""
    if f.basis != "F":
        raise ValueError("expected an F-expansion")
    acc: Counter = Counter()
    for J, c in f.coeffs.items():
        for I in refinements(J):
            acc[I] += c
    return SymFunc("M", f.degree, dict(acc))


def M_to_m_if_symmetric(f: SymFunc) -> SymFunc:
    """Collapse an M-expansion to m; raise NotSymmetric on a non-constant class."""
    if f.basis != "M":
        raise ValueError("expected an M-expansion")
    classes: dict[Partition, int] = {}
    for lam in partitions(f.degree):
        values = {}
        for comp in _rearrangements(lam):
            values[comp] = f.coeffs.get(comp, 0)
        distinct = set(values.values())
        if len(distinct) > 1:
            a, b = sorted(values, key=values.get)[0], sorted(values, key=values.get)[-1]
            raise NotSymmetric(f"M{list(a)} has coefficient {values[a]} but M{list(b)} has {values[b]}")
        c = distinct.pop()
        if c:
            classes[lam] = c
    return SymFunc("m", f.degree, classes)


@lru_cache(maxsize=None)
def _rearrangements(lam: Partition) -> tuple[Composition, ...]:
    out = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for c in frontier:
            for a in range(len(c) - 1):
                if c[a] != c[a + 1]:
                    d = c[:a] + (c[a + 1], c[a]) + c[a + 2:]
                    if d not in out:
                        out.add(d)
                        nxt.append(d)
        frontier = nxt
    return tuple(sorted(out))


# --- classical transition data ----------------------------------------------------


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content (backtracking)."""
    shape, content = tuple(shape), tuple(content)
    if sum(shape) != sum(content):
        raise ValueError(f"size mismatch: |{shape}| != |{content}|")
    return _kostka(shape, content)


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    # peel off the largest letter: it occupies a horizontal strip at the border
    if not content:
        return 1 if not shape else 0
    r = content[-1]
    rest = content[:-1]
    total = 0
    for inner in _horizontal_strip_removals(shape, r):
        total += _kostka(inner, rest)
    return total


def _horizontal_strip_removals(shape: Partition, r: int) -> list[Partition]:
    out = []
    rows = len(shape)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == rows:
            if remaining == 0:
                out.append(tuple(x for x in acc if x))
            return
        below = shape[i + 1] if i + 1 < rows else 0
        for take in range(0, min(remaining, shape[i] - below) + 1):
            acc.append(shape[i] - take)
            rec(i + 1, remaining - take, acc)
            acc.pop()

    rec(0, r, [])
    return out


def h_to_m(lam: Sequence[int]) -> SymFunc:
    """Monomial expansion of h_lam: coefficient of m_mu counts N-matrices with row sums lam, column sums mu."""
    lam = tuple(lam)
    n = sum(lam)
    return SymFunc("m", n, {mu: _count_matrices(lam, mu) for mu in partitions(n)})


@lru_cache(maxsize=None)
def _count_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    total = 0
    for split in _bounded_splits(first, cols):
        total += _count_matrices(rest, tuple(c - s for c, s in zip(cols, split)))
    return total


def _bounded_splits(total: int, caps: Sequence[int]) -> list[tuple[int, ...]]:
    out = []

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(caps):
            if remaining == 0:
                out.append(tuple(acc))
            return
        for x in range(min(remaining, caps[i]) + 1):
            acc.append(x)
            rec(i + 1, remaining - x, acc)
            acc.pop()

    rec(0, total, [])
    return out


@lru_cache(maxsize=None)
def h_to_m_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    return {lam: dict(h_to_m(lam).coeffs) for lam in partitions(n)}


@lru_cache(maxsize=None)
def m_to_h_matrix(n: int) -> dict[Partition, dict[Partition, int]]:
    """Inverse of the (symmetric, non-triangular) h-to-m matrix, by exact Gauss-Jordan."""
    keys = partitions(n)
    size = len(keys)
    mat = h_to_m_matrix(n)
    aug = [[Fraction(mat[r].get(c, 0)) for c in keys] + [Fraction(int(i == j)) for j in range(size)]
           for i, r in enumerate(keys)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    out = {}
    for i, lam in enumerate(keys):
        row = {}
        for j, mu in enumerate(keys):
            x = aug[i][size + j]
            if x.denominator != 1:
                raise ArithmeticError("h-to-m matrix has a non-integral inverse")
            if x:
                row[mu] = int(x)
        out[lam] = row
    return out


def m_product(lam: Sequence[int], mu: Sequence[int]) -> SymFunc:
    """m_lam * m_mu in the m basis."""
    return _m_product(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _m_product(lam: Partition, mu: Partition) -> SymFunc:
    # coefficient of m_nu = #{(a, b): a ~ lam, b ~ mu (zero-padded), a + b = nu}
    n = sum(lam) + sum(mu)
    out = {}
    for nu in partitions(n):
        r = len(nu)
        if r < max(len(lam), len(mu)) or r > len(lam) + len(mu):
            continue
        target_b = sorted(mu + (0,) * (r - len(mu)))
        count = 0
        for a in _rearrangements_padded(lam, r):
            b = [x - y for x, y in zip(nu, a)]
            if all(x >= 0 for x in b) and sorted(b) == target_b:
                count += 1
        if count:
            out[nu] = count
    return SymFunc("m", n, out)


@lru_cache(maxsize=None)
def _rearrangements_padded(lam: Partition, r: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_multiset_perms(lam + (0,) * (r - len(lam))))


def _multiset_perms(seq: tuple[int, ...]) -> list[tuple[int, ...]]:
    counts = Counter(seq)
    out = []

    def rec(acc: list[int]):
        if len(acc) == len(seq):
            out.append(tuple(acc))
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                acc.append(v)
                rec(acc)
                acc.pop()
                counts[v] += 1

    rec([])
    return out


def multiply_m(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != "m" or g.basis != "m":
        raise ValueError("multiply_m expects m-expansions")
    acc: Counter = Counter()
    for a, x in f.coeffs.items():
        for b, y in g.coeffs.items():
            for nu, z in _m_product(a, b).coeffs.items():
                acc[nu] += x * y * z
    return SymFunc("m", f.degree + g.degree, dict(acc))


def quotient_k(f: SymFunc, k: int) -> SymFunc:
    """Image in Lambda^(k): drop m_lam with lam_1 > k."""
    if f.basis != "m":
        raise ValueError("quotient is taken on m-expansions")
    return SymFunc("m", f.degree, {lam: c for lam, c in f.coeffs.items() if is_k_bounded(lam, k)})


# --- affine Stanley / affine Schur ------------------------------------------------


def affine_stanley(w: AffinePerm) -> SymFunc:
    """sum over k-bounded lam of <h_lam, u_w> m_lam."""
    k, n = w.k, w.length
    return SymFunc("m", n, {lam: h_lambda(k, lam).coeff(w) for lam in k_bounded_partitions(n, k)})


@lru_cache(maxsize=None)
def _dual_kschur_system(k: int, n: int):
    # column lam of A is the m-expansion of sbar_lam; A = M^T with M from degree_data
    data = degree_data(k, n)
    at = linalg.transpose(data.h_to_kschur)
    for lam in data.partitions:
        at.setdefault(lam, {})
    order = linalg.triangular_order(at, data.partitions)
    return at, order


def dual_kschur_expand(f: SymFunc, k: int) -> SymFunc:
    """Solve f = sum c_lam sbar_lam in Lambda^(k) (non-k-bounded m's are dropped)."""
    if f.basis != "m":
        raise ValueError("expected an m-expansion")
    f = quotient_k(f, k)
    at, order = _dual_kschur_system(k, f.degree)
    try:
        sol = linalg.solve_row(at, f.coeffs, order)
    except ValueError as exc:
        raise ValueError(f"not an element of Lambda^({k}): {exc}") from None
    return SymFunc("dual_kschur", f.degree, sol)


def dual_kschur_to_m(f: SymFunc, k: int) -> SymFunc:
    if f.basis != "dual_kschur":
        raise ValueError("expected a dual_kschur expansion")
    at, _ = _dual_kschur_system(k, f.degree)
    return SymFunc("m", f.degree, linalg.vecmat(f.coeffs, at))


def kschur_to_h(f: SymFunc, k: int) -> SymFunc:
    data = degree_data(k, f.degree)
    return SymFunc("h", f.degree, linalg.vecmat(f.coeffs, data.kschur_to_h))


def h_to_kschur(f: SymFunc, k: int) -> SymFunc:
    data = degree_data(k, f.degree)
    for lam in f.coeffs:
        check_k_bounded(lam, k)
    return SymFunc("kschur", f.degree, linalg.vecmat(f.coeffs, data.h_to_kschur))


def h_to_m_expansion(f: SymFunc) -> SymFunc:
    return SymFunc("m", f.degree, linalg.vecmat(f.coeffs, h_to_m_matrix(f.degree)))


def ribbon_in_h(comp: Sequence[int]) -> SymFunc:
    """Ribbon Schur function s_J in the h basis via s_J = h_{j1} s_[j2..] - s_[j1+j2, ..]."""
    return _ribbon_in_h(tuple(comp))


@lru_cache(maxsize=None)
def _ribbon_in_h(comp: Composition) -> SymFunc:
    n = sum(comp)
    if len(comp) <= 1:
        return SymFunc("h", n, {comp: 1} if comp else {(): 1})
    head, rest = comp[0], comp[1:]
    acc: Counter = Counter()
    for idx, c in _ribbon_in_h(rest).coeffs.items():
        acc[sort_partition((head,) + idx)] += c
    for idx, c in _ribbon_in_h((head + rest[0],) + rest[1:]).coeffs.items():
        acc[idx] -= c
    return SymFunc("h", n, dict(acc))


def ribbon_in_h_closed(comp: Sequence[int]) -> SymFunc:
    """Alternating sum over coarsenings K of J of h_{sort(K)}."""
    acc: Counter = Counter()
    for K in coarsenings(comp):
        acc[sort_partition(K)] += (-1) ** (len(comp) - len(K))
    return SymFunc("h", sum(comp), dict(acc))


# --- perp operators on Lambda_(k) ----------------------------------------------------


def h_perp(r: int, f: SymFunc) -> SymFunc:
    """Adjoint of multiplication by h_r, on an h-expansion."""
    if f.basis != "h":
        raise ValueError("h_perp acts on h-expansions")
    if r > f.degree:
        return SymFunc("h", max(f.degree - r, 0), {})
    acc: Counter = Counter()
    for lam, c in f.coeffs.items():
        for img, x in _h_perp_term(r, lam).items():
            acc[img] += c * x
    return SymFunc("h", f.degree - r, dict(acc))


@lru_cache(maxsize=None)
def _h_perp_term(r: int, lam: Partition) -> Counter:
    out: Counter = Counter()
    for split in _bounded_splits(r, lam):
        out[sort_partition(a - b for a, b in zip(lam, split))] += 1
    return out


def h_seq_perp(parts: Sequence[int], f: SymFunc) -> SymFunc:
    for p in parts:
        f = h_perp(p, f)
    return f


def perp(g: SymFunc, f: SymFunc) -> SymFunc:
    """g^perp applied to f; g in the h basis (any degree), f in the h basis."""
    if g.basis != "h":
        raise ValueError("perp expects the operator symbol in the h basis")
    out = SymFunc("h", max(f.degree - g.degree, 0), {})
    if g.degree > f.degree:
        return out
    for lam, c in g.coeffs.items():
        out = out + h_seq_perp(lam, f).scale(c)
    return out


def m_in_h_perp_basis(lam: Sequence[int]) -> SymFunc:
    """m_lam^perp written as a combination of h_mu^perp (through the inverse h-to-m matrix)."""
    lam = tuple(lam)
    return SymFunc("h", sum(lam), m_to_h_matrix(sum(lam))[lam])


def dual_kschur_in_h_perp_basis(lam: Sequence[int], k: int) -> SymFunc:
    """sbar_lam = sum_nu <h_nu, u_{w_lam}> m_nu, rewritten as an h-symbol for perp."""
    lam = check_k_bounded(tuple(lam), k)
    n = sum(lam)
    data = degree_data(k, n)
    acc: Counter = Counter()
    for nu in data.partitions:
        c = data.h_to_kschur[nu].get(lam, 0)
        if c:
            for mu, x in m_to_h_matrix(n)[nu].items():
                acc[mu] += c * x
    return SymFunc("h", n, dict(acc))


def perp_on_kschur(symbol: SymFunc, k: int):
    """The map s_lam -> k-Schur coordinates of symbol^perp(s_lam), for hat_extend."""

    @lru_cache(maxsize=None)
    def f(lam: Partition) -> dict:
        s_h = kschur_to_h(SymFunc("kschur", sum(lam), {lam: 1}), k)
        image = perp(symbol, s_h)
        return h_to_kschur(image, k).coeffs

    return f


@lru_cache(maxsize=None)
def _perp_map(kind: str, idx: tuple[int, ...], k: int):
    if kind == "ribbon":
        symbol = ribbon_in_h(idx)
    elif kind == "m":
        symbol = m_in_h_perp_basis(idx)
    elif kind == "dual_kschur":
        symbol = dual_kschur_in_h_perp_basis(idx, k)
    elif kind == "h":
        symbol = SymFunc("h", sum(idx), {sort_partition(idx): 1})
    else:
        raise ValueError(kind)
    return perp_on_kschur(symbol, k)


def ribbon_perp_kschur(comp: Sequence[int], lam: Sequence[int], k: int) -> dict:
    return _perp_map("ribbon", tuple(comp), k)(tuple(lam))


# --- strong Schur functions -------------------------------------------------------


def _check_pair(u: AffinePerm, v: AffinePerm):
    if u.k != v.k:
        raise ValueError(f"rank mismatch: {u.k} vs {v.k}")


def strong_schur_F(u: AffinePerm, v: AffinePerm) -> SymFunc:
    """Sum over strong-graph paths u -> ... -> v of F_{ascent composition}."""
    _check_pair(u, v)
    d = u.length - v.length
    if d < 0:
        return SymFunc("F", 0, {})
    counts = paths_by_ascomp(u, d).get(v, Counter())
    return SymFunc("F", d, dict(counts))


def strong_schur_m(u: AffinePerm, v: AffinePerm) -> SymFunc:
    """m-coefficients <D^lam(u_u), u_v> over all partitions lam."""
    _check_pair(u, v)
    d = u.length - v.length
    if d < 0:
        return SymFunc("m", 0, {})
    uu = basis(u)
    return SymFunc("m", d, {lam: D_pow(lam, uu).coeff(v) for lam in partitions(d)})


def _hat_coefficients(kind: str, u: AffinePerm, v: AffinePerm, indices: Iterable[Partition]) -> dict:
    uu = basis(u)
    return {lam: hat_extend(_perp_map(kind, lam, u.k), uu).coeff(v) for lam in indices}


def strong_schur_h(u: AffinePerm, v: AffinePerm) -> SymFunc:
    """h-coefficients <hat(m_lam^perp)(u_u), u_v>; only k-bounded lam can contribute."""
    _check_pair(u, v)
    d = u.length - v.length
    if d < 0:
        return SymFunc("h", 0, {})
    return SymFunc("h", d, _hat_coefficients("m", u, v, k_bounded_partitions(d, u.k)))


def strong_schur_kschur(u: AffinePerm, v: AffinePerm) -> SymFunc:
    """k-Schur coefficients <hat(sbar_lam^perp)(u_u), u_v>."""
    _check_pair(u, v)
    d = u.length - v.length
    if d < 0:
        return SymFunc("kschur", 0, {})
    return SymFunc("kschur", d, _hat_coefficients("dual_kschur", u, v, k_bounded_partitions(d, u.k)))


def strong_schur(u: AffinePerm, v: AffinePerm, basis_name: str = "m") -> SymFunc:
    if basis_name == "F":
        return strong_schur_F(u, v)
    if basis_name == "M":
        return F_to_M(strong_schur_F(u, v))
    if basis_name == "m":
        return strong_schur_m(u, v)
    if basis_name == "h":
        return strong_schur_h(u, v)
    if basis_name == "kschur":
        return strong_schur_kschur(u, v)
    raise ValueError(f"unsupported basis {basis_name!r} for strong Schur functions")


def strong_schur_partitions(mu: Sequence[int], nu: Sequence[int], k: int, basis_name: str = "kschur") -> SymFunc:
    return strong_schur(partition_to_grassmannian(tuple(mu), k), partition_to_grassmannian(tuple(nu), k), basis_name)


def skew_kschur(mu: Sequence[int], nu: Sequence[int], k: int) -> SymFunc:
    """sbar_nu^perp(s^(k)_mu) in the k-Schur basis, via the perp calculus on Lambda_(k)."""
    mu = check_k_bounded(tuple(mu), k)
    nu = check_k_bounded(tuple(nu), k)
    d = sum(mu) - sum(nu)
    if d < 0:
        return SymFunc("kschur", 0, {})
    return SymFunc("kschur", d, _perp_map("dual_kschur", nu, k)(mu))


def kschur_pairing_product(mu: Sequence[int], lam: Sequence[int], nu: Sequence[int], k: int) -> int:
    """<s^(k)_mu, sbar_lam sbar_nu>: the sbar_mu coefficient of the product in Lambda^(k)."""
    g = partition_to_grassmannian
    prod = multiply_m(affine_stanley(g(tuple(lam), k)), affine_stanley(g(tuple(nu), k)))
    return dual_kschur_expand(prod, k)[tuple(mu)]


def kschur_to_m(f: SymFunc, k: int) -> SymFunc:
    return h_to_m_expansion(kschur_to_h(f, k))


# --- sweeps ------------------------------------------------------------------------


def verify_restriction(k: int, max_degree: int = 6, max_size: int = 4) -> OperatorReport:
    """Graph-traversal D_J on s^(k)_lam against the ribbon perp computed in Lambda_(k)."""
    rep = OperatorReport("restriction of D_J to B is the ribbon perp",
                         {"k": k, "max_degree": max_degree, "max_size": max_size})
    for d in range(1, max_degree + 1):
        for lam in k_bounded_partitions(d, k):
            s = noncomm_kschur(k, lam)
            for m in range(1, min(max_size, d) + 1):
                for J in compositions(m):
                    expected = BExpansion(k, "kschur", ribbon_perp_kschur(J, lam, k)).to_elem()
                    rep.check(D_comp(J, s) == expected, lambda: f"J={J} lam={lam}")
    return rep


def verify_strong_schur(k: int, L: int) -> OperatorReport:
    """Symmetry, m-positivity, k-boundedness and basis agreement of every Strong_{u/v}."""
    rep = OperatorReport("strong Schur functions: symmetric, m-positive, in Lambda_(k)", {"k": k, "L": L})
    for u in elements_up_to(k, L):
        for v in paths_reachable(u):
            F = strong_schur_F(u, v)
            try:
                m = M_to_m_if_symmetric(F_to_M(F))
            except NotSymmetric as exc:
                reason = str(exc)
                rep.check(False, lambda: f"u={u} v={v}: {reason}")
                continue
            rep.check(all(c > 0 for c in m.coeffs.values()), lambda: f"u={u} v={v}: negative m-coefficient {m}")
            rep.check(m == strong_schur_m(u, v), lambda: f"u={u} v={v}: F route and D_pow route differ")
            h = strong_schur_h(u, v)
            rep.check(h_to_m_expansion(h) == m, lambda: f"u={u} v={v}: h-expansion {h} does not match {m}")
            ks = strong_schur_kschur(u, v)
            rep.check(kschur_to_h(ks, k) == h, lambda: f"u={u} v={v}: kschur-expansion {ks} does not match {h}")
    return rep


def paths_reachable(u: AffinePerm) -> list[AffinePerm]:
    """Every v reachable from u in the strong graph, u included."""
    out = [u]
    for d in range(1, u.length + 1):
        out.extend(sorted(paths_by_ascomp(u, d), key=AffinePerm.sort_key))
    return out


def verify_grassmannian_strong(k: int, max_degree: int = 6) -> OperatorReport:
    """Strong_mu = s^(k)_mu, the pairing formula for Strong_{mu/nu}, and both skew routes."""
    rep = OperatorReport("Grassmannian strong Schur functions and skew k-Schur functions",
                         {"k": k, "max_degree": max_degree})
    for a in range(max_degree + 1):
        for mu in k_bounded_partitions(a, k):
            rep.check(strong_schur_partitions(mu, (), k) == SymFunc("kschur", a, {mu: 1}),
                      lambda: f"Strong_{mu} is not s^(k)_{mu}")
            for b in range(a + 1):
                for nu in k_bounded_partitions(b, k):
                    strong = strong_schur_partitions(mu, nu, k)
                    rep.check(strong == skew_kschur(mu, nu, k), lambda: f"skew routes differ at {mu}/{nu}")
                    for lam in k_bounded_partitions(a - b, k):
                        rep.check(strong[lam] == kschur_pairing_product(mu, lam, nu, k),
                                  lambda: f"coefficient of s_{lam} in Strong_{mu}/{nu}")
    return rep


def verify_m_perp_vanishing(k: int, max_degree: int = 6) -> OperatorReport:
    """m_lam^perp kills every h_kappa (kappa k-bounded) when lam is not k-bounded."""
    rep = OperatorReport("m_lam^perp vanishes on Lambda_(k) for lam not k-bounded", {"k": k, "max_degree": max_degree})
    for n in range(1, max_degree + 1):
        for lam in partitions(n):
            if is_k_bounded(lam, k):
                continue
            symbol = m_in_h_perp_basis(lam)
            for total in range(n, max_degree + 1):
                for kappa in k_bounded_partitions(total, k):
                    image = perp(symbol, SymFunc("h", total, {kappa: 1}))
                    rep.check(not image.coeffs, lambda: f"m_{lam}^perp(h_{kappa}) = {image}")
    return rep


def verify_k_pieri(k: int, max_degree: int = 6) -> OperatorReport:
    """h_i s^(k)_lam = sum of s^(k)_nu over weak strips w_lam -> w_nu of size i."""
    rep = OperatorReport("k-Pieri rule by weak strips", {"k": k, "max_degree": max_degree})
    for d in range(max_degree):
        for lam in k_bounded_partitions(d, k):
            w = partition_to_grassmannian(lam, k)
            for i in range(1, min(k, max_degree - d) + 1):
                expected = {grassmannian_to_partition(v): 1 for v in weak_strip_targets(w, i) if v.is_grassmannian}
                got = kschur_expansion(h(k, i) * noncomm_kschur(k, lam)).coeffs
                rep.check(got == expected, lambda: f"h_{i} s_{lam}: {got} vs {expected}")
    return rep


SYMFUNC_SWEEPS = {
    "restriction": lambda k, L: verify_restriction(k, L, 4),
    "strong_schur": lambda k, L: verify_strong_schur(k, L),
    "grassmannian_strong": lambda k, L: verify_grassmannian_strong(k, L),
    "m_perp_vanishing": lambda k, L: verify_m_perp_vanishing(k, L),
    "k_pieri": lambda k, L: verify_k_pieri(k, L),
}
