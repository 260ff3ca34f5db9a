"""The affine symmetric group of rank k in window notation.

An element ``w`` is a bijection of the integers with ``w(n + k + 1) = w(n) + k + 1``
and ``w(1) + ... + w(k+1) = 1 + ... + (k+1)``; it is stored as the window
``(w(1), ..., w(k+1))``.

Products compose as functions with the right factor applied first, so the word
``s_{i_1} s_{i_2} ... s_{i_l}`` acts with ``s_{i_l}`` innermost. Under this
convention ``y = s_1 s_2 s_0`` (k=2) has ``y(1) = -2`` and ``y(4) = 1``.

>>> y = from_word(2, [1, 2, 0])
>>> y.window, y(1), y(4)
((-2, 3, 5), -2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .combinat import Partition, check_k_bounded, partition

# Enumeration bound used by the CLI; window entries stay within +-(L+1)(k+1).
MAX_SAFE_LENGTH = 14


@dataclass(frozen=True)
class AffinePerm:
    k: int
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.k + 1
        if self.k < 1:
            raise ValueError("rank k must be >= 1")
        if len(self.window) != n:
            raise ValueError(f"window must have {n} entries, got {self.window}")
        if len({x % n for x in self.window}) != n:
            raise ValueError(f"window entries must be distinct mod {n}: {self.window}")
        if sum(self.window) != n * (n + 1) // 2:
            raise ValueError(f"window must sum to {n * (n + 1) // 2}: {self.window}")

    @property
    def n(self) -> int:
        return self.k + 1

    def __call__(self, m: int) -> int:
        return apply(self, m)

    def __mul__(self, other: AffinePerm) -> AffinePerm:
        return multiply(self, other)

    @cached_property
    def length(self) -> int:
        n, w = self.k + 1, self.window
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                total += abs((w[j] - w[i]) // n)
        return total

    @cached_property
    def is_grassmannian(self) -> bool:
        w = self.window
        return all(w[i] < w[i + 1] for i in range(self.k))

    @cached_property
    def is_finite(self) -> bool:
        return sorted(self.window) == list(range(1, self.k + 2))

    def sort_key(self):
        return (self.length, self.window)

    def word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def __repr__(self) -> str:
        word = reduced_word(self)
        if not word:
            return f"AffinePerm(k={self.k}, 1)"
        return f"AffinePerm(k={self.k}, " + "".join(f"s{i}" for i in word) + ")"

    def to_json(self) -> dict:
        return {"k": self.k, "window": list(self.window)}

    @classmethod
    def from_json(cls, data: dict) -> AffinePerm:
        return cls(int(data["k"]), tuple(int(x) for x in data["window"]))


def _check_same_rank(*perms: AffinePerm) -> int:
    ks = {p.k for p in perms}
    if len(ks) != 1:
        raise ValueError(f"rank mismatch: {sorted(ks)}")
    return ks.pop()


def identity(k: int) -> AffinePerm:
    return _identity(k)


@lru_cache(maxsize=None)
def _identity(k: int) -> AffinePerm:
    return AffinePerm(k, tuple(range(1, k + 2)))


def simple(k: int, i: int) -> AffinePerm:
    return _simple(k, i)


@lru_cache(maxsize=None)
def _simple(k: int, i: int) -> AffinePerm:
    if not 0 <= i <= k:
        raise ValueError(f"simple reflection index must lie in 0..{k}, got {i}")
    w = list(range(1, k + 2))
    if i == 0:
        w[0], w[k] = 0, k + 2
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return AffinePerm(k, tuple(w))


def apply(w: AffinePerm, m: int) -> int:
    n = w.k + 1
    q, r = divmod(m - 1, n)
    return w.window[r] + q * n


def multiply(v: AffinePerm, w: AffinePerm) -> AffinePerm:
    """The composite ``v o w`` (``w`` applied first)."""
    _check_same_rank(v, w)
    n = v.k + 1
    vw = v.window
    out = []
    for x in w.window:
        q, r = divmod(x - 1, n)
        out.append(vw[r] + q * n)
    return AffinePerm(v.k, tuple(out))


def inverse(w: AffinePerm) -> AffinePerm:
    n = w.k + 1
    out = [0] * n
    for p, x in enumerate(w.window, start=1):
        q, r = divmod(x - 1, n)
        out[r] = p - q * n
    return AffinePerm(w.k, tuple(out))


def length(w: AffinePerm) -> int:
    return w.length


def from_word(k: int, word: Iterable[int]) -> AffinePerm:
    """Evaluate ``s_{i_1} ... s_{i_l}`` (not required to be reduced)."""
    w = identity(k)
    for i in reversed(list(word)):
        w = multiply(simple(k, i), w)
    return w


def transposition(k: int, i: int, j: int) -> AffinePerm:
    """The reflection ``t_{i,j}`` swapping ``i + m(k+1)`` and ``j + m(k+1)`` for all m."""
    n = k + 1
    if (i - j) % n == 0:
        raise ValueError(f"t_{{{i},{j}}} needs i and j in different residue classes mod {n}")
    w = list(range(1, n + 1))
    qi, ri = divmod(i - 1, n)
    qj, rj = divmod(j - 1, n)
    # position ri+1 holds i - qi*n; it is sent to j - qi*n
    w[ri] = j - qi * n
    w[rj] = i - qj * n
    return AffinePerm(k, tuple(w))


def left_descents(w: AffinePerm) -> frozenset[int]:
    """Residues i with l(s_i w) < l(w), i.e. w^{-1}(i) > w^{-1}(i+1)."""
    winv = inverse(w)
    return frozenset(i for i in range(w.k + 1) if apply(winv, i) > apply(winv, i + 1))


def right_descents(w: AffinePerm) -> frozenset[int]:
    return frozenset(i for i in range(w.k + 1) if apply(w, i) > apply(w, i + 1))


def reduced_word(w: AffinePerm) -> tuple[int, ...]:
    return _reduced_word(w)


@lru_cache(maxsize=65536)
def _reduced_word(w: AffinePerm) -> tuple[int, ...]:
    word = []
    while w.length:
        i = min(left_descents(w))
        word.append(i)
        w = multiply(simple(w.k, i), w)
    return tuple(word)


def grassmannian_factorize(w: AffinePerm) -> tuple[AffinePerm, AffinePerm]:
    """Split ``w = w_grass * w_finite`` with ``w_grass`` 0-Grassmannian and ``w_finite`` in W_0."""
    grass = AffinePerm(w.k, tuple(sorted(w.window)))
    return grass, multiply(inverse(grass), w)


def elements_up_to(k: int, max_length: int) -> list[AffinePerm]:
    """Every element of length at most ``max_length``, grouped by length."""
    return [w for level in _levels(k, max_length) for w in level]


def elements_of_length(k: int, ell: int) -> tuple[AffinePerm, ...]:
    return _levels(k, ell)[ell]


@lru_cache(maxsize=None)
def _levels(k: int, max_length: int) -> tuple[tuple[AffinePerm, ...], ...]:
    if max_length < 0:
        raise ValueError("length bound must be nonnegative")
    if max_length == 0:
        return ((identity(k),),)
    prev = _levels(k, max_length - 1)
    seen = set()
    for w in prev[-1]:
        for i in range(k + 1):
            v = multiply(simple(k, i), w)
            if v.length == max_length:
                seen.add(v)
    return prev + (tuple(sorted(seen, key=AffinePerm.sort_key)),)


def grassmannian_elements(k: int, ell: int) -> list[AffinePerm]:
    return [w for w in elements_of_length(k, ell) if w.is_grassmannian]


# --- (k+1)-cores -------------------------------------------------------------


def _conjugate(lam: Sequence[int]) -> list[int]:
    if not lam:
        return []
    return [sum(1 for x in lam if x > c) for c in range(lam[0])]


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    conj = _conjugate(lam)
    return [[lam[r] - c + conj[c] - r - 1 for c in range(lam[r])] for r in range(len(lam))]


def is_core(lam: Sequence[int], n: int) -> bool:
    return all(h != n for row in hook_lengths(lam) for h in row)


def _addable(lam: Sequence[int]) -> list[tuple[int, int]]:
    cells = []
    for r in range(len(lam) + 1):
        c = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > c:
            cells.append((r, c))
    return cells


def _removable(lam: Sequence[int]) -> list[tuple[int, int]]:
    cells = []
    for r, c in enumerate(lam):
        if r == len(lam) - 1 or lam[r + 1] < c:
            cells.append((r, c - 1))
    return cells


def core_add(core: Sequence[int], i: int, k: int) -> Partition:
    """Act by s_i: add every addable cell of residue i (content mod k+1)."""
    n = k + 1
    rows = list(core)
    cells = [(r, c) for r, c in _addable(rows) if (c - r) % n == i]
    if not cells:
        raise ValueError(f"core {tuple(core)} has no addable cell of residue {i}")
    for r, _ in cells:
        if r == len(rows):
            rows.append(1)
        else:
            rows[r] += 1
    return tuple(rows)


def core_to_k_bounded(core: Sequence[int], k: int) -> Partition:
    hooks = hook_lengths(core)
    return partition(x for x in (sum(1 for h in row if h <= k) for row in hooks) if x)


def k_bounded_to_core(lam: Sequence[int], k: int) -> Partition:
    """Slide rows (bottom to top) right until every cell has hook length at most k."""
    lam = check_k_bounded(lam, k)
    rows: list[int] = []  # core rows built bottom-up
    for part in reversed(lam):
        shift = 0
        while part + sum(1 for x in rows if x > shift) > k:
            shift += 1
        rows.append(shift + part)
    return tuple(reversed(rows))


def grassmannian_to_core(w: AffinePerm) -> Partition:
    if not w.is_grassmannian:
        raise ValueError(f"{w!r} is not 0-Grassmannian")
    core: Partition = ()
    for i in reversed(reduced_word(w)):
        core = core_add(core, i, w.k)
    return core


def core_to_grassmannian(core: Sequence[int], k: int) -> AffinePerm:
    n = k + 1
    if not is_core(core, n):
        raise ValueError(f"{tuple(core)} is not a {n}-core")
    rows = list(core)
    word = []
    while rows:
        i = min((c - r) % n for r, c in _removable(rows))
        for r, c in _removable(rows):
            if (c - r) % n == i:
                rows[r] -= 1
        while rows and rows[-1] == 0:
            rows.pop()
        word.append(i)
    return from_word(k, word)


def grassmannian_to_partition(w: AffinePerm) -> Partition:
    return core_to_k_bounded(grassmannian_to_core(w), w.k)


@lru_cache(maxsize=None)
def _partition_to_grassmannian(lam: Partition, k: int) -> AffinePerm:
    w = core_to_grassmannian(k_bounded_to_core(lam, k), k)
    assert w.is_grassmannian and w.length == sum(lam)
    return w


def partition_to_grassmannian(lam: Sequence[int], k: int) -> AffinePerm:
    return _partition_to_grassmannian(check_k_bounded(lam, k), k)


def parse_element(k: int, text: str) -> AffinePerm:
    """Parse ``"0,1,2,0"`` (a word), ``"e"``/``""`` (identity) or ``"w:[0,2,4]"`` (a window)."""
    text = text.strip()
    if text.startswith("w:"):
        body = text[2:].strip().strip("[]")
        return AffinePerm(k, tuple(int(x) for x in body.split(",")))
    if text in ("", "id", "e"):
        return identity(k)
    word = [int(x) for x in text.replace("s", "").split(",") if x.strip()]
    for i in word:
        if not 0 <= i <= k:
            raise ValueError(f"letter {i} outside 0..{k}")
    return from_word(k, word)
