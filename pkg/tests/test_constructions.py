import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotrail.coloring import color_class, components, max_component_edges
from monotrail.constructions import (
    AffinePlaneParams,
    BadM,
    BadN,
    NotPrime,
    SplitMix64,
    affine_plane_coloring,
    extremal_bipartite_split,
    field_ops,
    random_coloring,
    splitmix64_block,
)

# published reference outputs of splitmix64 seeded with 0
SPLITMIX_SEED0 = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix_reference_vector():
    s = SplitMix64(0)
    assert [s.next() for _ in range(3)] == SPLITMIX_SEED0


@given(st.integers(0, 2**64 - 1), st.integers(0, 50), st.integers(1, 40))
def test_vectorised_stream_matches_scalar(seed, start, count):
    s = SplitMix64(seed)
    for _ in range(start):
        s.next()
    expected = [s.next() for _ in range(count)]
    assert [int(x) for x in splitmix64_block(seed, count, start)] == expected


def test_random_coloring_examples():
    assert random_coloring(1, 3, 99).colors.size == 0
    assert random_coloring(5, 2, 0) == random_coloring(5, 2, 0)
    s = SplitMix64(0)
    assert random_coloring(5, 2, 0).colors.tolist() == [s.next() % 2 for _ in range(10)]
    assert random_coloring(5, 2, 0) != random_coloring(5, 2, 1)


def test_random_coloring_uses_all_colours():
    c = random_coloring(40, 5, 11)
    assert sorted(set(c.colors.tolist())) == [0, 1, 2, 3, 4]


# field tables --------------------------------------------------------------

def test_field_examples():
    f2 = field_ops(2)
    assert f2.add == ((0, 1), (1, 0)) and f2.mul == ((0, 0), (0, 1))
    f3 = field_ops(3)
    assert f3.mul[2][2] == 1 and f3.inv[2] == 2
    assert field_ops(5).inv[3] == 2
    for q in (0, 1, 4, 6, 9, 12):
        with pytest.raises(NotPrime):
            field_ops(q)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 13])
def test_field_axioms(q):
    f = field_ops(q)
    r = range(q)
    for a, b, c in itertools.product(r, r, r):
        assert f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]]
        assert f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]
        assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]
    for a, b in itertools.product(r, r):
        assert f.add[a][b] == f.add[b][a] and f.mul[a][b] == f.mul[b][a]
    for a in r:
        assert f.add[a][0] == a and f.mul[a][1] == a and f.add[a][f.neg[a]] == 0
    assert f.inv[0] is None
    for a in range(1, q):
        assert f.mul[a][f.inv[a]] == 1


# extremal split ------------------------------------------------------------

def test_extremal_examples():
    c = extremal_bipartite_split(9)
    red, blue = color_class(c, 0), color_class(c, 1)
    assert red.num_edges == 18 and blue.num_edges == 15 + 3
    assert max_component_edges(c).global_max == 18 == 2 * 9 * 9 // 9
    c = extremal_bipartite_split(3)
    assert color_class(c, 0).edges == [(0, 1), (0, 2)]
    assert color_class(c, 1).edges == [(1, 2)]
    assert max_component_edges(extremal_bipartite_split(300)).global_max == 20000
    with pytest.raises(BadN):
        extremal_bipartite_split(1)


def is_bipartite(g):
    side = {}
    adj = g.adjacency()
    for s in range(g.n):
        if s in side:
            continue
        side[s] = 0
        todo = [s]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    todo.append(y)
                elif side[y] == side[x]:
                    return False
    return True


@settings(max_examples=60, deadline=None)
@given(st.integers(9, 400))
def test_extremal_structure(n):
    c = extremal_bipartite_split(n)
    assert is_bipartite(color_class(c, 0))
    blue = [cp for cp in components(color_class(c, 1)) if cp.vertex_count > 1]
    a = n // 3
    assert sorted(cp.vertex_count for cp in blue) == sorted([a, n - a])
    for cp in blue:
        assert cp.edge_count == math.comb(cp.vertex_count, 2)
    top = max_component_edges(c).global_max
    assert top == max(a * (n - a), math.comb(n - a, 2), math.comb(a, 2))
    assert abs(top - 2 * n * n / 9) <= n


# affine planes -------------------------------------------------------------

def component_orders(c):
    return {col: [cp.vertex_count for cp in components(color_class(c, col))] for col in range(c.k)}


def test_affine_q2_is_three_matchings():
    c = affine_plane_coloring(AffinePlaneParams(2, 1))
    assert (c.n, c.k) == (4, 3)
    for col in range(3):
        g = color_class(c, col)
        assert g.num_edges == 2 and g.degree.tolist() == [1, 1, 1, 1]


def test_affine_q3_triangles():
    c = affine_plane_coloring(AffinePlaneParams(3, 1))
    assert (c.n, c.k) == (9, 4)
    for col in range(4):
        comps = components(color_class(c, col))
        assert [(cp.vertex_count, cp.edge_count) for cp in comps] == [(3, 3)] * 3


def test_affine_q2_m2():
    c = affine_plane_coloring(AffinePlaneParams(2, 2))
    assert (c.n, c.k) == (8, 3)
    assert max(max(v) for v in component_orders(c).values()) == 4
    top = max_component_edges(c).global_max
    assert top <= math.comb(4, 2)


def test_affine_params_validation():
    with pytest.raises(NotPrime):
        AffinePlaneParams(4, 1)
    with pytest.raises(BadM):
        AffinePlaneParams(3, 0)
    p = AffinePlaneParams(5, 3)
    assert (p.n, p.k) == (75, 6) and p.n % (p.k - 1) ** 2 == 0


@pytest.mark.parametrize("q,m", [(2, 1), (2, 3), (3, 2), (5, 1), (7, 1)])
def test_affine_components_are_lines(q, m):
    c = affine_plane_coloring(AffinePlaneParams(q, m))
    assert c.k == q + 1
    for col, orders in component_orders(c).items():
        assert orders == [q * m] * q
