"""The affine nilCoxeter algebra.

Elements are finite integer combinations of basis elements ``u_w``. The product
of two basis elements is ``u_v u_w = u_{vw}`` when ``l(vw) = l(v) + l(w)`` and
zero otherwise; this single rule encodes ``u_i^2 = 0`` together with the braid
and commutation relations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .affine_perm import AffinePerm, from_word, identity, multiply, parse_element, reduced_word


class NilCoxElem:
    """An immutable sparse combination ``sum c_w u_w`` with nonzero integer ``c_w``."""

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: Mapping[AffinePerm, int] | Iterable[tuple[AffinePerm, int]] = ()):
        self.k = k
        acc: dict[AffinePerm, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if w.k != k:
                raise ValueError(f"rank mismatch: element of rank {w.k} in algebra of rank {k}")
            acc[w] = acc.get(w, 0) + int(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, k: int, terms: dict[AffinePerm, int]) -> NilCoxElem:
        out = cls.__new__(cls)
        out.k = k
        out._terms = terms
        return out

    # -- container protocol --------------------------------------------------

    @property
    def terms(self) -> dict[AffinePerm, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator[AffinePerm]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: AffinePerm) -> int:
        return self._terms.get(w, 0)

    def __getitem__(self, w: AffinePerm) -> int:
        return self._terms.get(w, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, NilCoxElem):
            return self.k == other.k and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.k, frozenset(self._terms.items())))

    # -- module structure ----------------------------------------------------

    def _check(self, other: NilCoxElem):
        if self.k != other.k:
            raise ValueError(f"rank mismatch: {self.k} vs {other.k}")

    def __add__(self, other: NilCoxElem) -> NilCoxElem:
        if not isinstance(other, NilCoxElem):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        return NilCoxElem._raw(self.k, acc)

    def __neg__(self) -> NilCoxElem:
        return NilCoxElem._raw(self.k, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: NilCoxElem) -> NilCoxElem:
        return self + (-other)

    def scale(self, c: int) -> NilCoxElem:
        if not c:
            return zero(self.k)
        return NilCoxElem._raw(self.k, {w: c * x for w, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, NilCoxElem):
            return multiply_elems(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    # -- grading -------------------------------------------------------------

    def degrees(self) -> set[int]:
        return {w.length for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def graded_piece(self, d: int) -> NilCoxElem:
        return NilCoxElem._raw(self.k, {w: c for w, c in self._terms.items() if w.length == d})

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[AffinePerm, int]]:
        return sorted(self._terms.items(), key=lambda wc: wc[0].sort_key())

    def __repr__(self) -> str:
        return f"NilCoxElem(k={self.k}, {render(self)})"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [{"window": list(w.window), "coeff": c} for w, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> NilCoxElem:
        k = int(data["k"])
        return cls(k, [(AffinePerm(k, tuple(t["window"])), int(t["coeff"])) for t in data["terms"]])


def zero(k: int) -> NilCoxElem:
    return NilCoxElem._raw(k, {})


def basis(w: AffinePerm) -> NilCoxElem:
    return NilCoxElem._raw(w.k, {w: 1})


def scalar(k: int, c: int = 1) -> NilCoxElem:
    return NilCoxElem(k, {identity(k): c})


def u(k: int, word: str | Iterable[int]) -> NilCoxElem:
    """Shorthand for ``u_{s_{i_1}} ... u_{s_{i_l}}``; zero if the word is not reduced."""
    word = list(word) if not isinstance(word, str) else [int(x) for x in word.split(",") if x.strip()]
    w = from_word(k, word)
    if w.length != len(word):
        return zero(k)
    return basis(w)


def basis_product(v: AffinePerm, w: AffinePerm) -> NilCoxElem:
    vw = multiply(v, w)
    if vw.length == v.length + w.length:
        return basis(vw)
    return zero(v.k)


def multiply_elems(a: NilCoxElem, b: NilCoxElem) -> NilCoxElem:
    a._check(b)
    acc: dict[AffinePerm, int] = {}
    for v, cv in a._terms.items():
        lv = v.length
        for w, cw in b._terms.items():
            vw = multiply(v, w)
            if vw.length == lv + w.length:
                acc[vw] = acc.get(vw, 0) + cv * cw
    return NilCoxElem._raw(a.k, {w: c for w, c in acc.items() if c})


def right_multiply_basis(a: NilCoxElem, w: AffinePerm) -> NilCoxElem:
    """``a * u_w``."""
    lw = w.length
    acc: dict[AffinePerm, int] = {}
    for v, c in a._terms.items():
        vw = multiply(v, w)
        if vw.length == v.length + lw:
            acc[vw] = acc.get(vw, 0) + c
    return NilCoxElem._raw(a.k, {x: c for x, c in acc.items() if c})


def inner(a: NilCoxElem, b: NilCoxElem) -> int:
    """The pairing making ``{u_w}`` orthonormal."""
    a._check(b)
    if len(a) > len(b):
        a, b = b, a
    return sum(c * b.coeff(w) for w, c in a.items())


def coeff(a: NilCoxElem, w: AffinePerm) -> int:
    return a.coeff(w)


def render_word(w: AffinePerm) -> str:
    word = reduced_word(w)
    return "".join(f"u{i}" for i in word) if word else "1"


def render(a: NilCoxElem, latex: bool = False) -> str:
    if not a:
        return "0"
    parts = []
    for w, c in a.sorted_terms():
        if latex:
            word = reduced_word(w)
            mono = "".join(f"\\mathbf{{u}}_{{{i}}}" for i in word) if word else "1"
        else:
            mono = render_word(w)
        if mono == "1":
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def parse_elem(k: int, text: str) -> NilCoxElem:
    """Parse a sum of terms ``[c*]spec`` separated by ``+``.

    ``spec`` is a word such as ``"1,2,1,0"`` (zero when not reduced), a window
    ``"w:[...]"``, or ``"e"`` for the identity.
    """
    out = zero(k)
    for chunk in text.split("+"):
        chunk = chunk.strip()
        coef = 1
        if "*" in chunk:
            head, chunk = chunk.split("*", 1)
            coef = int(head)
        if chunk.startswith("w:") or chunk in ("", "e", "id"):
            term = basis(parse_element(k, chunk))
        else:
            word = [int(x) for x in chunk.replace("s", "").split(",") if x.strip()]
            if any(not 0 <= i <= k for i in word):
                raise ValueError(f"letter outside 0..{k} in {chunk!r}")
            term = u(k, word)
        out = out + term.scale(coef)
    return out