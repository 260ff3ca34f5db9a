import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from nilcox.affine_perm import apply, elements_of_length, elements_up_to, from_word, multiply, transposition
from nilcox.combinat import compositions
from nilcox.fomin_stanley import h
from nilcox.nilcoxeter import basis
from nilcox.strip_graphs import (
    ascent_composition,
    check_edge,
    paths_by_ascomp,
    paths_with_ascomp,
    strong_edges_from,
    strong_graph,
    strong_strip_targets,
    to_dot,
    to_json_edges,
    truncated_vertices,
    weak_graph,
    weak_strip_targets,
)


def brute_strong_edges(x):
    # oracle: every y one step down, every t_{i,j} with i <= 0 < j in a generous box
    n = x.k + 1
    box = (x.length + 2) * n
    out = Counter()
    if x.length == 0:
        return out
    for y in elements_of_length(x.k, x.length - 1):
        for i in range(-box, 1):
            for j in range(1, box + 1):
                if (j - i) % n and multiply(y, transposition(x.k, i, j)) == x:
                    out[(y, apply(y, j), i, j)] += 1
    return out


@pytest.mark.parametrize("k,L", [(1, 5), (2, 4), (3, 3)])
def test_strong_edges_match_brute_force(k, L):
    for x in elements_up_to(k, L):
        got = Counter((e.target, e.label, e.i, e.j) for e in strong_edges_from(x))
        assert got == brute_strong_edges(x), x


def test_marking_example_double_edge():
    x, y = from_word(2, [0, 1, 2, 0]), from_word(2, [1, 2, 0])
    edges = [e for e in strong_edges_from(x) if e.target == y]
    assert sorted(e.label for e in edges) == [-2, 1]
    assert sorted((e.i, e.j) for e in edges) == [(-4, 1), (-1, 4)]


def test_truncated_graph_size():
    verts = truncated_vertices(2, 4)
    assert len(verts) == 20
    assert len(strong_graph(verts)) == 34
    assert len(weak_graph(verts)) == 23


@pytest.mark.parametrize("k", [2, 3])
def test_every_edge_rechecks(k):
    for x in elements_up_to(k, 5):
        assert all(check_edge(e) for e in strong_edges_from(x))


def test_ascent_composition():
    assert ascent_composition([3, 2, 0, 3, 4, 1]) == (3, 1, 2)
    assert ascent_composition([5]) == (1,)
    assert ascent_composition([1, 2, 3]) == (1, 1, 1)
    with pytest.raises(ValueError):
        ascent_composition([])


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_ascent_composition_sums_to_length(labels):
    comp = ascent_composition(labels)
    assert sum(comp) == len(labels)
    assert len(comp) == 1 + sum(a < b for a, b in zip(labels, labels[1:]))


@pytest.mark.parametrize("k", [2, 3])
def test_paths_by_composition_partition_all_paths(k):
    for w in elements_up_to(k, 5):
        for m in range(1, 4):
            grouped = paths_by_ascomp(w, m)
            for comp in compositions(m):
                direct = paths_with_ascomp(w, comp)
                assert direct == Counter({v: c[comp] for v, c in grouped.items() if c[comp]})
            # the one-part composition is the strong strip
            assert strong_strip_targets(w, m) == Counter(
                {v: c[(m,)] for v, c in grouped.items() if c[(m,)]}
            )


@pytest.mark.parametrize("k", [2, 3])
def test_weak_strips_are_left_multiplication_by_h(k):
    for w in elements_up_to(k, 4):
        for j in range(1, k + 1):
            expected = h(k, j) * basis(w)
            assert set(expected.support()) == weak_strip_targets(w, j)
            assert all(c == 1 for _, c in expected.items())


def test_exports_are_deterministic_and_parse():
    verts = truncated_vertices(2, 3)
    assert to_dot(verts, "strong") == to_dot(list(reversed(verts)), "strong")
    data = json.loads(to_json_edges(verts, "strong"))
    assert {"src", "dst", "label"} <= set(data[0])
    assert to_dot(verts, "weak").startswith("digraph weak")
