"""Weak order graph, marked strong order graph, strips and label-constrained paths.

Strong edges ``x -> y`` exist when ``l(x) = l(y) + 1`` and ``x = y t_{i,j}`` for
some ``i <= 0 < j``; each such representation is a separate edge, labelled by
the marking ``y(j)``. A reflection ``t_{a,b}`` has one representation
``(a + m(k+1), b + m(k+1))`` for each shift m that puts the pair across 0.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .affine_perm import AffinePerm, apply, elements_up_to, multiply, simple, transposition
from .combinat import Composition, descent_set
from .fomin_stanley import cyclically_decreasing_elements
from .nilcoxeter import render_word


@dataclass(frozen=True)
class StrongEdge:
    source: AffinePerm
    target: AffinePerm
    label: int
    i: int
    j: int

    def to_json(self) -> dict:
        return {"src": list(self.source.window), "dst": list(self.target.window), "label": self.label}


# --- weak order -------------------------------------------------------------


def weak_strip_targets(w: AffinePerm, j: int) -> set[AffinePerm]:
    """All v with v w^{-1} cyclically decreasing of length j and l(v) = l(w) + j."""
    out = set()
    for d in cyclically_decreasing_elements(w.k, j):
        v = multiply(d, w)
        if v.length == w.length + j:
            out.add(v)
    return out


def weak_edges_from(w: AffinePerm) -> list[tuple[AffinePerm, int]]:
    """Covers ``w -> s_i w`` of left weak order, labelled by i."""
    out = []
    for i in range(w.k + 1):
        v = multiply(simple(w.k, i), w)
        if v.length == w.length + 1:
            out.append((v, i))
    return out


# --- strong order -------------------------------------------------------------


def strong_edges_from(x: AffinePerm) -> tuple[StrongEdge, ...]:
    return _strong_edges_from(x)


@lru_cache(maxsize=None)
def _strong_edges_from(x: AffinePerm) -> tuple[StrongEdge, ...]:
    n = x.k + 1
    ell = x.length
    edges = []
    # x(a) > x(b) with a < b forces at least (b - a)/n inversions, so b - a <= l(x) n
    for a in range(1, n + 1):
        for b in range(a + 1, a + ell * n + 1):
            if (b - a) % n == 0 or apply(x, a) < apply(x, b):
                continue
            y = multiply(x, transposition(x.k, a, b))
            if y.length != ell - 1:
                continue
            lo = -((b - 1) // n)  # smallest m with b + m n > 0
            hi = (-a) // n  # largest m with a + m n <= 0
            for m in range(lo, hi + 1):
                i, j = a + m * n, b + m * n
                edges.append(StrongEdge(x, y, apply(y, j), i, j))
    edges.sort(key=lambda e: (e.target.sort_key(), e.label))
    return tuple(edges)


def check_edge(edge: StrongEdge) -> bool:
    """Re-verify the cover condition of a single edge from scratch."""
    x, y = edge.source, edge.target
    return (
        x.length == y.length + 1
        and edge.i <= 0 < edge.j
        and multiply(y, transposition(x.k, edge.i, edge.j)) == x
        and apply(y, edge.j) == edge.label
    )


def ascent_composition(labels: Sequence[int]) -> Composition:
    """Composition of len(labels) cut at every ascent ``labels[a] < labels[a+1]``."""
    if not labels:
        raise ValueError("ascent composition of an empty sequence is undefined")
    out, run = [], 1
    for a in range(len(labels) - 1):
        if labels[a] < labels[a + 1]:
            out.append(run)
            run = 1
        else:
            run += 1
    out.append(run)
    return tuple(out)


def strong_strip_targets(w: AffinePerm, i: int) -> Counter:
    """Endpoints of strictly label-decreasing paths of length i, with multiplicity."""
    return _strong_strip_targets(w, i)


@lru_cache(maxsize=None)
def _strong_strip_targets(w: AffinePerm, i: int) -> Counter:
    if i < 0:
        return Counter()
    if i == 0:
        return Counter({w: 1})
    states: Counter = Counter()
    for e in _strong_edges_from(w):
        states[(e.target, e.label)] += 1
    for _ in range(i - 1):
        nxt: Counter = Counter()
        for (v, last), c in states.items():
            for e in _strong_edges_from(v):
                if e.label < last:
                    nxt[(e.target, e.label)] += c
        states = nxt
    out: Counter = Counter()
    for (v, _), c in states.items():
        out[v] += c
    return out


def paths_with_ascomp(w: AffinePerm, comp: Sequence[int]) -> Counter:
    """Endpoints of paths of length sum(comp) whose labels have ascent composition ``comp``."""
    return _paths_with_ascomp(w, tuple(comp))


@lru_cache(maxsize=None)
def _paths_with_ascomp(w: AffinePerm, comp: Composition) -> Counter:
    if any(p <= 0 for p in comp):
        raise ValueError(f"composition parts must be positive: {comp}")
    m = sum(comp)
    if m == 0:
        return Counter({w: 1})
    ascents = descent_set(comp)
    states: Counter = Counter()
    for e in _strong_edges_from(w):
        states[(e.target, e.label)] += 1
    for step in range(1, m):
        want_ascent = step in ascents
        nxt: Counter = Counter()
        for (v, last), c in states.items():
            for e in _strong_edges_from(v):
                if (e.label > last) == want_ascent:
                    nxt[(e.target, e.label)] += c
        states = nxt
    out: Counter = Counter()
    for (v, _), c in states.items():
        out[v] += c
    return out


def paths_by_ascomp(w: AffinePerm, m: int) -> dict[AffinePerm, Counter]:
    """For every endpoint v of a length-m path from w: counts of paths by ascent composition."""
    return _paths_by_ascomp(w, m)


@lru_cache(maxsize=None)
def _paths_by_ascomp(w: AffinePerm, m: int) -> dict[AffinePerm, Counter]:
    if m == 0:
        return {w: Counter({(): 1})}
    # state: (vertex, last label, ascent composition so far)
    states: Counter = Counter()
    for e in _strong_edges_from(w):
        states[(e.target, e.label, (1,))] += 1
    for _ in range(m - 1):
        nxt: Counter = Counter()
        for (v, last, comp), c in states.items():
            for e in _strong_edges_from(v):
                if e.label > last:
                    nc = comp + (1,)
                else:
                    nc = comp[:-1] + (comp[-1] + 1,)
                nxt[(e.target, e.label, nc)] += c
        states = nxt
    out: dict[AffinePerm, Counter] = {}
    for (v, _, comp), c in states.items():
        out.setdefault(v, Counter())[comp] += c
    return out


# --- truncated graphs and export ---------------------------------------------------


def truncated_vertices(k: int, top_length: int) -> list[AffinePerm]:
    """Elements reachable in the strong graph from Grassmannian elements of length ``top_length``."""
    tops = [w for w in elements_up_to(k, top_length) if w.length == top_length and w.is_grassmannian]
    seen = set(tops)
    frontier = list(tops)
    while frontier:
        nxt = []
        for x in frontier:
            for e in _strong_edges_from(x):
                if e.target not in seen:
                    seen.add(e.target)
                    nxt.append(e.target)
        frontier = nxt
    return sorted(seen, key=AffinePerm.sort_key)


def strong_graph(vertices: Iterable[AffinePerm]) -> list[StrongEdge]:
    verts = set(vertices)
    return [e for x in sorted(verts, key=AffinePerm.sort_key) for e in _strong_edges_from(x) if e.target in verts]


def weak_graph(vertices: Iterable[AffinePerm]) -> list[tuple[AffinePerm, AffinePerm, int]]:
    verts = set(vertices)
    out = []
    for w in sorted(verts, key=AffinePerm.sort_key):
        for v, i in weak_edges_from(w):
            if v in verts:
                out.append((w, v, i))
    return out


def _node_name(w: AffinePerm) -> str:
    return render_word(w).replace("u", "s") if w.length else "1"


def to_dot(vertices: Iterable[AffinePerm], which: str) -> str:
    verts = sorted(set(vertices), key=AffinePerm.sort_key)
    name = {w: _node_name(w) for w in verts}
    lines = [f"digraph {which} {{", "  rankdir=BT;" if which == "weak" else "  rankdir=TB;"]
    for w in verts:
        lines.append(f'  "{name[w]}";')
    if which == "weak":
        for src, dst, i in weak_graph(verts):
            lines.append(f'  "{name[src]}" -> "{name[dst]}" [label="{i}"];')
    elif which == "strong":
        for e in strong_graph(verts):
            lines.append(f'  "{name[e.source]}" -> "{name[e.target]}" [label="{e.label}"];')
    else:
        raise ValueError(f"unknown graph {which!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_edges(vertices: Iterable[AffinePerm], which: str) -> str:
    verts = set(vertices)
    if which == "strong":
        data = [e.to_json() for e in strong_graph(verts)]
    else:
        data = [{"src": list(s.window), "dst": list(d.window), "label": i} for s, d, i in weak_graph(verts)]
    return json.dumps(data, indent=1)
