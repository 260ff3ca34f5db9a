"""Exact integer linear algebra for unitriangular change-of-basis matrices.

Matrices are sparse ``dict[row][col] -> int`` over hashable keys. A matrix is
unitriangular when its diagonal is 1 and its off-diagonal support is acyclic;
``triangular_order`` finds the order (a topological sort), so callers never
need to know it in advance.
"""

from __future__ import annotations

from graphlib import CycleError, TopologicalSorter
from typing import Hashable, Iterable, Mapping

Matrix = Mapping[Hashable, Mapping[Hashable, int]]


class NotUnitriangular(ValueError):
    pass


def triangular_order(matrix: Matrix, keys: Iterable[Hashable]) -> list:
    """Order ``keys`` so that ``matrix[a][b] != 0`` with ``a != b`` puts ``a`` before ``b``."""
    keys = list(keys)
    index = {key: i for i, key in enumerate(keys)}
    ts = TopologicalSorter()
    for a in keys:
        row = matrix.get(a, {})
        if row.get(a, 0) != 1:
            raise NotUnitriangular(f"diagonal entry at {a!r} is {row.get(a, 0)}, expected 1")
        ts.add(a)
        for b, val in row.items():
            if b == a or not val:
                continue
            if b not in index:
                raise NotUnitriangular(f"column {b!r} outside the key set")
            ts.add(b, a)
    try:
        ts.prepare()
    except CycleError as exc:
        raise NotUnitriangular(f"support is not triangular in any order: {exc.args[1]}") from None
    order = []
    while ts.is_active():
        ready = sorted(ts.get_ready(), key=index.__getitem__)
        order.extend(ready)
        ts.done(*ready)
    return order


def solve_row(matrix: Matrix, rhs: Mapping[Hashable, int], order: list) -> dict:
    """Solve ``x . M = rhs`` (x a row vector) for unitriangular M."""
    x: dict = {}
    residual = dict(rhs)
    for b in order:
        val = residual.pop(b, 0)
        if not val:
            continue
        x[b] = val
        for c, m in matrix[b].items():
            if c != b and m:
                residual[c] = residual.get(c, 0) - val * m
    leftover = {c: v for c, v in residual.items() if v}
    if leftover:
        raise ValueError(f"right-hand side has entries outside the basis: {leftover}")
    return x


def invert(matrix: Matrix, keys: Iterable[Hashable]) -> dict:
    """Exact inverse N with ``N . M = M . N = 1``."""
    keys = list(keys)
    order = triangular_order(matrix, keys)
    return {a: solve_row(matrix, {a: 1}, order) for a in keys}


def matmul(a: Matrix, b: Matrix) -> dict:
    out: dict = {}
    for r, row in a.items():
        acc: dict = {}
        for m, x in row.items():
            for c, y in b.get(m, {}).items():
                acc[c] = acc.get(c, 0) + x * y
        out[r] = {c: v for c, v in acc.items() if v}
    return out


def vecmat(vec: Mapping[Hashable, int], matrix: Matrix) -> dict:
    """Row vector times matrix."""
    acc: dict = {}
    for r, x in vec.items():
        for c, y in matrix.get(r, {}).items():
            acc[c] = acc.get(c, 0) + x * y
    return {c: v for c, v in acc.items() if v}


def transpose(matrix: Matrix) -> dict:
    out: dict = {}
    for r, row in matrix.items():
        out.setdefault(r, {})
        for c, v in row.items():
            if v:
                out.setdefault(c, {})[r] = v
    return out
