import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from monotrail.coloring import (
    ColorClassGraph,
    ColorOutOfRange,
    MissingEdge,
    NotSimple,
    color_class,
    component_labels,
    components,
    constant_coloring,
    degree_parity,
    max_component_edges,
    new_coloring,
    pair_rank,
)
from monotrail.constructions import extremal_bipartite_split

from conftest import colorings, complete, cycle, graphs


def bfs_components(g):
    """Independent reference: plain BFS over adjacency sets."""
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, out = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        comp, todo = {s}, [s]
        seen.add(s)
        while todo:
            x = todo.pop()
            for y in adj[x] - seen:
                seen.add(y)
                comp.add(y)
                todo.append(y)
        out.append(comp)
    return out


def test_pair_rank_matches_enumeration():
    for n in range(1, 8):
        expected = list(itertools.combinations(range(n), 2))
        assert [pair_rank(n, u, v) for u, v in expected] == list(range(len(expected)))
        assert all(pair_rank(n, v, u) == pair_rank(n, u, v) for u, v in expected)


def test_new_coloring_constant():
    c = new_coloring(3, 2, lambda u, v: 0)
    assert color_class(c, 0).num_edges == 3
    assert color_class(c, 1).num_edges == 0


def test_new_coloring_single_vertex():
    c = new_coloring(1, 2, {})
    assert c.colors.size == 0
    assert color_class(c, 0).num_edges == 0


def test_new_coloring_missing_pair():
    with pytest.raises(MissingEdge):
        new_coloring(3, 2, {(0, 1): 0, (0, 2): 1})


def test_new_coloring_out_of_range():
    with pytest.raises(ColorOutOfRange):
        new_coloring(3, 2, {(0, 1): 0, (0, 2): 2, (1, 2): 0})


def test_new_coloring_mapping_either_orientation():
    c = new_coloring(3, 2, {(1, 0): 1, (2, 0): 0, (2, 1): 1})
    assert c.color_of(0, 1) == 1 and c.color_of(2, 0) == 0 and c.color_of(1, 2) == 1


def test_coloring_is_read_only():
    c = constant_coloring(4, 2)
    with pytest.raises(ValueError):
        c.colors[0] = 1


def test_from_edges_rejects_non_simple():
    with pytest.raises(NotSimple):
        ColorClassGraph.from_edges(3, [(0, 0)])
    with pytest.raises(NotSimple):
        ColorClassGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(NotSimple):
        ColorClassGraph.from_edges(3, [(0, 3)])


def test_color_class_complete_and_empty():
    c = constant_coloring(4, 2)
    red = color_class(c, 0)
    assert red.num_edges == 6 and red.degree.tolist() == [3, 3, 3, 3]
    blue = color_class(c, 1)
    assert blue.num_edges == 0 and blue.degree.tolist() == [0] * 4
    with pytest.raises(ColorOutOfRange):
        color_class(c, 2)


def test_color_class_extremal_nine():
    red = color_class(extremal_bipartite_split(9), 0)
    assert red.num_edges == 3 * 6
    assert sorted(red.edges) == sorted((a, b) for a in range(3) for b in range(3, 9))


def test_components_complete():
    comps = components(color_class(constant_coloring(4, 2), 0))
    assert [(cp.vertex_count, cp.edge_count) for cp in comps] == [(4, 6)]


def test_components_isolated():
    comps = components(ColorClassGraph.from_edges(5, []))
    assert [(cp.vertices, cp.edge_count) for cp in comps] == [((i,), 0) for i in range(5)]


def test_components_extremal_nine_blue():
    comps = components(color_class(extremal_bipartite_split(9), 1))
    assert [(cp.vertex_count, cp.edge_count) for cp in comps] == [(6, 15), (3, 3)]
    assert comps[0].vertices == tuple(range(3, 9))


def test_components_tie_order():
    # two triangles and an edge: equal edge counts break on vertex count then id
    g = ColorClassGraph.from_edges(9, [(5, 6), (6, 7), (5, 7), (0, 1), (1, 2), (0, 2), (3, 4)])
    comps = components(g)
    assert [cp.root for cp in comps] == [0, 5, 3, 8]


def test_degree_parity_examples():
    assert degree_parity(cycle(4)).odd_vertices == ()
    assert degree_parity(complete(4)).odd_vertices == (0, 1, 2, 3)
    path = degree_parity(ColorClassGraph.from_edges(3, [(0, 1), (1, 2)]))
    assert path.odd_vertices == (0, 2) and not path[1]


def test_max_component_edges_examples():
    assert max_component_edges(constant_coloring(5, 2)).global_max == 10
    m = max_component_edges(extremal_bipartite_split(9))
    assert (m.global_max, m.color, m.per_color) == (18, 0, (18, 15))
    big = max_component_edges(extremal_bipartite_split(300))
    assert big.global_max == 20000 == max(100 * 200, 199 * 200 // 2)


def test_degenerate_sizes():
    for n in (1, 2):
        c = constant_coloring(n, 2, 1)
        for col in range(2):
            g = color_class(c, col)
            comps = components(g)
            assert sum(cp.edge_count for cp in comps) == g.num_edges
            assert sum(cp.vertex_count for cp in comps) == n


def test_union_find_long_path():
    n = 2000
    perm = np.random.default_rng(1).permutation(n)
    labels = component_labels(n, perm[:-1], perm[1:])
    assert (labels == 0).all()


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_components_match_bfs(g):
    comps = components(g)
    assert sorted(cp.vertices for cp in comps) == sorted(tuple(sorted(s)) for s in bfs_components(g))
    keys = [(-cp.edge_count, -cp.vertex_count, cp.root) for cp in comps]
    assert keys == sorted(keys)
    assert sum(cp.edge_count for cp in comps) == g.num_edges
    for cp in comps:
        assert cp.edge_count == g.induced_edge_count(cp.vertices)
    assert components(g) == comps


@settings(max_examples=150, deadline=None)
@given(colorings())
def test_partition_and_handshake(c):
    total = 0
    for col in range(c.k):
        g = color_class(c, col)
        total += g.num_edges
        assert int(g.degree.sum()) == 2 * g.num_edges
        assert len(degree_parity(g).odd_vertices) % 2 == 0
        assert all(c.color_of(u, v) == col for u, v in g.edges)
    assert total == c.n * (c.n - 1) // 2
