"""Partitions and compositions.

Both are plain tuples of positive integers. Partitions are weakly decreasing;
compositions are arbitrary. Helpers here validate, enumerate and combine them.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def composition(parts: Iterable[int]) -> Composition:
    c = tuple(int(x) for x in parts)
    if any(x <= 0 for x in c):
        raise ValueError(f"composition parts must be positive: {c}")
    return c


def is_k_bounded(lam: Sequence[int], k: int) -> bool:
    return not lam or lam[0] <= k


def check_k_bounded(lam: Sequence[int], k: int) -> Partition:
    lam = partition(lam)
    if not is_k_bounded(lam, k):
        raise ValueError(f"partition {lam} is not {k}-bounded")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts at most ``max_part``, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def k_bounded_partitions(n: int, k: int) -> tuple[Partition, ...]:
    return partitions(n, k)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    out = []
    for cuts in range(n):
        for pos in combinations(range(1, n), cuts):
            bounds = (0,) + pos + (n,)
            out.append(tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)))
    return tuple(out)


def descent_set(comp: Sequence[int]) -> frozenset[int]:
    """Partial sums of ``comp`` excluding the total."""
    s, out = 0, set()
    for part in comp[:-1]:
        s += part
        out.add(s)
    return frozenset(out)


def from_descent_set(n: int, cuts: Iterable[int]) -> Composition:
    if n == 0:
        return ()
    bounds = (0,) + tuple(sorted(cuts)) + (n,)
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def refines(finer: Sequence[int], coarser: Sequence[int]) -> bool:
    """True when ``finer`` is a refinement of ``coarser`` (equal sums required)."""
    return sum(finer) == sum(coarser) and descent_set(coarser) <= descent_set(finer)


def refinements(comp: Sequence[int]) -> Iterator[Composition]:
    """Every composition I that refines ``comp`` (so F_comp = sum of M_I)."""
    n = sum(comp)
    base = descent_set(comp)
    free = [x for x in range(1, n) if x not in base]
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            yield from_descent_set(n, base | set(extra))


def coarsenings(comp: Sequence[int]) -> Iterator[Composition]:
    """Every composition K obtained from ``comp`` by merging adjacent parts."""
    n = sum(comp)
    base = sorted(descent_set(comp))
    for r in range(len(base) + 1):
        for keep in combinations(base, r):
            yield from_descent_set(n, keep)


def boxplus(i: Sequence[int], j: Sequence[int]) -> Composition:
    """Concatenate with the last part of ``i`` merged into the first of ``j``."""
    return tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])


def boxdot(i: Sequence[int], j: Sequence[int]) -> Composition:
    return tuple(i) + tuple(j)


def sort_partition(parts: Iterable[int]) -> Partition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def size(parts: Sequence[int]) -> int:
    return sum(parts)
