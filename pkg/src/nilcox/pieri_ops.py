"""The operators U_j and D_J on the affine nilCoxeter algebra, plus identity sweeps.

``U(j, a)`` is left multiplication by h_j. ``D_comp(J, a)`` sums the endpoints of
strong-graph paths with ascent composition J, computed as one path query;
``D(i, a)`` is the single-part case and ``D_pow(lam, a)`` the composite
``D_{lam_1} o ... o D_{lam_l}``.

Each ``verify_*`` sweep checks an identity on every ``u_w`` with ``l(w) <= L``
and collects all failures into an :class:`OperatorReport`.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .affine_perm import AffinePerm, elements_up_to, grassmannian_to_partition, partition_to_grassmannian
from .combinat import Composition, Partition, boxdot, boxplus, compositions, k_bounded_partitions, refinements
from .fomin_stanley import h, h_lambda, is_in_B, noncomm_kschur
from .nilcoxeter import NilCoxElem, basis, basis_product, render, zero
from .strip_graphs import _paths_with_ascomp, _strong_strip_targets, weak_strip_targets


def _linear(a: NilCoxElem, image: Callable[[AffinePerm], Counter]) -> NilCoxElem:
    acc: dict[AffinePerm, int] = {}
    for w, c in a.items():
        for v, x in image(w).items():
            acc[v] = acc.get(v, 0) + c * x
    return NilCoxElem(a.k, acc)


def U(j: int, a: NilCoxElem) -> NilCoxElem:
    if j < 0:
        return zero(a.k)
    if j > a.k:
        raise ValueError(f"U_{j} is undefined for k={a.k}")
    return h(a.k, j) * a


def D(i: int, a: NilCoxElem) -> NilCoxElem:
    if i < 0:
        return zero(a.k)
    return _linear(a, lambda w: _strong_strip_targets(w, i))


def D_comp(comp: Sequence[int], a: NilCoxElem) -> NilCoxElem:
    comp = tuple(comp)
    return _linear(a, lambda w: _paths_with_ascomp(w, comp))


def D_pow(parts: Sequence[int], a: NilCoxElem) -> NilCoxElem:
    """``D_{p_1} o D_{p_2} o ... o D_{p_r}`` (rightmost applied first)."""
    for p in reversed(tuple(parts)):
        a = D(p, a)
    return a


# --- operator expressions (CLI grammar) --------------------------------------------

_TERM = re.compile(r"\s*(U|D\^|D)\s*(\[[\d,\s]*\]|\d+)\s*")


@dataclass(frozen=True)
class OpTerm:
    kind: str  # "U", "D" (ascent composition) or "D^" (composite of single D's)
    parts: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "U" or (self.kind == "D" and len(self.parts) == 1):
            return f"{self.kind}{self.parts[0]}"
        return f"{self.kind}[{','.join(map(str, self.parts))}]"

    def apply(self, a: NilCoxElem) -> NilCoxElem:
        if self.kind == "U":
            return U(self.parts[0], a)
        if self.kind == "D":
            return D_comp(self.parts, a)
        return D_pow(self.parts, a)


@dataclass(frozen=True)
class OpSpec:
    """A composite ``T_1 * T_2 * ... * T_r`` acting with T_r first."""

    terms: tuple[OpTerm, ...]

    def __str__(self) -> str:
        return "*".join(str(t) for t in self.terms)

    def apply(self, a: NilCoxElem) -> NilCoxElem:
        for t in reversed(self.terms):
            a = t.apply(a)
        return a


def parse_op(text: str) -> OpSpec:
    """Parse e.g. ``"D[2,1]"``, ``"U2"``, ``"D^[2,1]"`` or ``"D1*U2"``."""
    terms = []
    for chunk in text.split("*"):
        m = _TERM.fullmatch(chunk)
        if not m:
            raise ValueError(f"cannot parse operator term {chunk!r}")
        kind, body = m.groups()
        parts = tuple(int(x) for x in body.strip("[]").split(",") if x.strip())
        if not parts or any(p < 0 for p in parts) or (kind != "U" and any(p == 0 for p in parts)):
            raise ValueError(f"bad operator indices in {chunk!r}")
        if kind == "U" and len(parts) != 1:
            raise ValueError("U takes a single index")
        terms.append(OpTerm(kind, parts))
    return OpSpec(tuple(terms))


# --- reports ------------------------------------------------------------------


@dataclass
class OperatorReport:
    identity_name: str
    parameters: dict
    checked_count: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, describe: Callable[[], str]):
        self.checked_count += 1
        if not ok:
            self.failures.append(describe())

    def to_json(self) -> dict:
        return {
            "identity": self.identity_name,
            "parameters": self.parameters,
            "checked": self.checked_count,
            "passed": self.passed,
            "failures": self.failures[:50],
            "failure_count": len(self.failures),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{status}  {self.identity_name} {self.parameters} checked={self.checked_count}"


def _elements(k: int, L: int) -> list[AffinePerm]:
    return elements_up_to(k, L)


def _comps_up_to(size: int) -> list[Composition]:
    return [c for n in range(1, size + 1) for c in compositions(n)]


def _sum(elems: Iterable[NilCoxElem], k: int) -> NilCoxElem:
    out = zero(k)
    for e in elems:
        out = out + e
    return out


# --- sweeps -------------------------------------------------------------------------


def verify_weak_strips(k: int, L: int) -> OperatorReport:
    rep = OperatorReport("U_j(u_w) = sum of weak strip targets", {"k": k, "L": L})
    for w in _elements(k, L):
        for j in range(k + 1):
            expected = NilCoxElem(k, {v: 1 for v in weak_strip_targets(w, j)})
            got = U(j, basis(w))
            rep.check(got == expected, lambda: f"U_{j}(u_{w!r}) = {render(got)} != {render(expected)}")
    return rep


def verify_product_rule(k: int, L: int, max_size: int = 3, sum_size: int = 4) -> OperatorReport:
    """D_I o D_J = D_{I boxplus J} + D_{I boxdot J}, and the refinement-sum identity."""
    rep = OperatorReport("D_I D_J = D_(I+J) + D_(I.J); sum_(J<=I) D_J = D_i1...D_ir",
                         {"k": k, "L": L, "max_size": max_size, "sum_size": sum_size})
    comps = _comps_up_to(max_size)
    for w in _elements(k, L):
        uw = basis(w)
        for J in comps:
            dj = D_comp(J, uw)
            for I in comps:
                lhs = D_comp(I, dj)
                rhs = D_comp(boxplus(I, J), uw) + D_comp(boxdot(I, J), uw)
                rep.check(lhs == rhs, lambda: f"I={I} J={J} w={w!r}: {render(lhs)} != {render(rhs)}")
        for I in _comps_up_to(sum_size):
            # J <= I in reverse refinement order: J is a coarsening of I
            lhs = _sum((D_comp(J, uw) for J in compositions(sum(I)) if _is_coarsening(J, I)), k)
            rhs = D_pow(I, uw)
            rep.check(lhs == rhs, lambda: f"refinement sum I={I} w={w!r}: {render(lhs)} != {render(rhs)}")
    return rep


def _is_coarsening(J: Sequence[int], I: Sequence[int]) -> bool:
    return tuple(I) in set(refinements(J))


def verify_commutation(k: int, L: int, imax: int | None = None, jmax: int | None = None) -> OperatorReport:
    """D_i U_j = sum_e U_{j-e} D_{i-e} and D_i U_j - U_j D_i = D_{i-1} U_{j-1}."""
    imax = k if imax is None else imax
    jmax = k if jmax is None else min(jmax, k)
    rep = OperatorReport("commutation relation and bracket", {"k": k, "L": L, "imax": imax, "jmax": jmax})
    for w in _elements(k, L):
        uw = basis(w)
        for i in range(1, imax + 1):
            for j in range(1, jmax + 1):
                lhs = D(i, U(j, uw))
                rhs = _sum((U(j - e, D(i - e, uw)) for e in range(min(i, j) + 1)), k)
                rep.check(lhs == rhs, lambda: f"commutation i={i} j={j} w={w!r}")
                bracket = lhs - U(j, D(i, uw))
                rep.check(bracket == D(i - 1, U(j - 1, uw)), lambda: f"bracket i={i} j={j} w={w!r}")
    return rep


def verify_D_on_h(k: int) -> OperatorReport:
    """D_i(h_r) = h_{r-i} (zero when i > r)."""
    rep = OperatorReport("D_i(h_r) = h_(r-i)", {"k": k})
    for r in range(k + 1):
        for i in range(0, k + 2):
            got = D(i, h(k, r))
            want = h(k, r - i)
            rep.check(got == want, lambda: f"D_{i}(h_{r}) = {render(got)}")
    return rep


def verify_B_stability(k: int, max_degree: int = 6, max_size: int = 3) -> OperatorReport:
    rep = OperatorReport("D_J(B) in B", {"k": k, "max_degree": max_degree, "max_size": max_size})
    for n in range(1, max_degree + 1):
        for lam in k_bounded_partitions(n, k):
            hl = h_lambda(k, lam)
            for J in _comps_up_to(min(max_size, n)):
                ok, _ = is_in_B(D_comp(J, hl))
                rep.check(ok, lambda: f"D_{J}(h_{lam}) not in B")
    return rep


def finite_elements(k: int) -> list[AffinePerm]:
    return sorted((AffinePerm(k, p) for p in permutations(range(1, k + 2))), key=AffinePerm.sort_key)


def verify_module_morphism(k: int, L: int, imax: int | None = None) -> OperatorReport:
    """U_j(u_w u_v) = U_j(u_w) u_v and D_i(u_w u_v) = D_i(u_w) u_v for v in W_0."""
    imax = L if imax is None else imax
    rep = OperatorReport("module morphism over W_0", {"k": k, "L": L, "imax": imax})
    fin = finite_elements(k)
    for v in fin:
        for i in range(1, imax + 1):
            got = D(i, basis(v))
            rep.check(not got, lambda: f"D_{i}(u_{v!r}) = {render(got)} != 0")
    for w in _elements(k, L):
        uw = basis(w)
        for v in fin:
            wv = basis_product(w, v)
            if not wv:
                continue
            uv = basis(v)
            for j in range(k + 1):
                rep.check(U(j, wv) == U(j, uw) * uv, lambda: f"U_{j} w={w!r} v={v!r}")
            for i in range(1, imax + 1):
                rep.check(D(i, wv) == D(i, uw) * uv, lambda: f"D_{i} w={w!r} v={v!r}")
    return rep


def verify_commuting_family(k: int, L: int, max_size: int = 3) -> OperatorReport:
    rep = OperatorReport("D_J D_K = D_K D_J", {"k": k, "L": L, "max_size": max_size})
    comps = _comps_up_to(max_size)
    for w in _elements(k, L):
        uw = basis(w)
        for a, J in enumerate(comps):
            for K in comps[a + 1:]:
                lhs = D_comp(J, D_comp(K, uw))
                rhs = D_comp(K, D_comp(J, uw))
                rep.check(lhs == rhs, lambda: f"J={J} K={K} w={w!r}")
    return rep


def kschur_pieri_perp(lam: Sequence[int], i: int, k: int) -> Counter:
    """k-bounded mu (with multiplicity) reached by size-i strong strips from w_lam."""
    start = partition_to_grassmannian(tuple(lam), k)
    out: Counter = Counter()
    for v, c in _strong_strip_targets(start, i).items():
        if v.is_grassmannian:
            out[grassmannian_to_partition(v)] += c
    return out


def verify_pieri_perp(k: int, max_degree: int = 6, imax: int = 3) -> OperatorReport:
    """D_i(s_lam) = sum over strong strips w_lam -> w_mu of s_mu."""
    rep = OperatorReport("D_i(s_lam) = sum_strips s_mu", {"k": k, "max_degree": max_degree, "imax": imax})
    for n in range(max_degree + 1):
        for lam in k_bounded_partitions(n, k):
            s = noncomm_kschur(k, lam)
            for i in range(1, imax + 1):
                image = D(i, s)
                ok, exp = is_in_B(image)
                want = kschur_pieri_perp(lam, i, k)
                rep.check(ok and exp.coeffs == dict(want), lambda: f"lam={lam} i={i}")
    return rep


def restriction_of(op: Callable[[NilCoxElem], NilCoxElem], k: int) -> Callable[[Partition], dict]:
    """The map s_lam -> k-Schur coordinates of op(s_lam), for hat_extend."""

    def f(lam: Partition) -> dict:
        ok, exp = is_in_B(op(noncomm_kschur(k, lam)))
        if not ok:
            raise ValueError(f"operator does not preserve B at s_{lam}")
        return exp.coeffs

    return f


def verify_extension(k: int, L: int, max_size: int = 3) -> OperatorReport:
    """D_J coincides with the extension to A of its restriction to B."""
    from .fomin_stanley import hat_extend

    rep = OperatorReport("hat(D_J|B) = D_J", {"k": k, "L": L, "max_size": max_size})
    for J in _comps_up_to(max_size):
        f = restriction_of(lambda a, J=J: D_comp(J, a), k)
        for w in _elements(k, L):
            uw = basis(w)
            rep.check(hat_extend(f, uw) == D_comp(J, uw), lambda: f"J={J} w={w!r}")
    return rep


def verify_single_part_agreement(k: int, L: int, imax: int = 4) -> OperatorReport:
    rep = OperatorReport("D_i = D_[i]", {"k": k, "L": L})
    for w in _elements(k, L):
        for i in range(1, imax + 1):
            rep.check(D(i, basis(w)) == D_comp((i,), basis(w)), lambda: f"i={i} w={w!r}")
    return rep


ALL_SWEEPS = {
    "weak_strips": lambda k, L: verify_weak_strips(k, L),
    "product_rule": lambda k, L: verify_product_rule(k, L, 3, 4),
    "commutation": lambda k, L: verify_commutation(k, L),
    "D_on_h": lambda k, L: verify_D_on_h(k),
    "B_stability": lambda k, L: verify_B_stability(k, L, 3),
    "module_morphism": lambda k, L: verify_module_morphism(k, L),
    "commuting_family": lambda k, L: verify_commuting_family(k, L, 3),
    "pieri_perp": lambda k, L: verify_pieri_perp(k, L, 3),
    "extension": lambda k, L: verify_extension(k, min(L, 5), 3),
    "single_part": lambda k, L: verify_single_part_agreement(k, L),
}
