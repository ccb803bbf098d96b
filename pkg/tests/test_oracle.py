import itertools

import pytest
from hypothesis import given, settings

from monotrail.circuit import solve, verify
from monotrail.coloring import ColorClassGraph, EdgeColoring, components
from monotrail.eulerize import parity_forest
from monotrail.oracle import (
    TooLarge,
    best_monochromatic,
    coloring_from_index,
    longest_circuit_exact,
    longest_trail_exact,
    worst_case_search,
)

from conftest import complete, cycle, graphs


def subset_oracle(g, closed):
    """Longest trail via Euler's criterion: an edge set is traversable in one
    trail iff it is connected with 0 or 2 odd vertices (0 for a circuit)."""
    edges = g.edges
    best = 0
    for mask in range(1, 1 << len(edges)):
        sub = [e for i, e in enumerate(edges) if mask >> i & 1]
        if len(sub) <= best:
            continue
        deg = {}
        for u, v in sub:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        odd = sum(d & 1 for d in deg.values())
        if odd > (0 if closed else 2):
            continue
        # connectivity of the touched vertices
        start = sub[0][0]
        seen, todo = {start}, [start]
        while todo:
            x = todo.pop()
            for u, v in sub:
                for a, b in ((u, v), (v, u)):
                    if a == x and b not in seen:
                        seen.add(b)
                        todo.append(b)
        if len(seen) == len(deg):
            best = len(sub)
    return best


def as_coloring(g):
    edges = set(g.edges)
    return EdgeColoring(g.n, 2, [0 if p in edges else 1 for p in itertools.combinations(range(g.n), 2)])


def test_trail_examples():
    assert longest_trail_exact(complete(3)).best == 3
    assert longest_trail_exact(ColorClassGraph.from_edges(3, [(0, 1), (1, 2)])).best == 2
    r = longest_trail_exact(complete(4))
    assert r.best == 5 == subset_oracle(complete(4), False)
    assert r.witness.vertices == (0, 1, 2, 0, 3, 1)


def test_circuit_examples():
    assert longest_circuit_exact(complete(3)).best == 3
    tree = ColorClassGraph.from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    assert longest_circuit_exact(tree).best == 0
    r = longest_circuit_exact(complete(4))
    assert r.best == 4 == subset_oracle(complete(4), True)
    assert r.witness.closed and r.witness.vertices[0] == 0


def test_empty_graph():
    g = ColorClassGraph.from_edges(3, [])
    assert longest_trail_exact(g).best == 0
    assert longest_circuit_exact(g).best == 0


def test_size_guard():
    k8 = complete(8)
    with pytest.raises(TooLarge):
        longest_trail_exact(k8)
    assert longest_trail_exact(k8, limit=28).best == 28 - (8 - 2) // 2
    for n in (8, 9):
        with pytest.raises(TooLarge):
            worst_case_search(n, allow_seven=True)
    with pytest.raises(TooLarge):
        worst_case_search(7)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_oracles_match_subset_enumeration(g):
    t = longest_trail_exact(g)
    c = longest_circuit_exact(g)
    assert t.best == subset_oracle(g, False)
    assert c.best == subset_oracle(g, True)
    assert c.best <= t.best
    col = as_coloring(g)
    assert verify(col, t.witness) and t.witness.length == t.best
    assert verify(col, c.witness) and c.witness.length == c.best
    assert c.witness.closed == (c.best > 0)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_eulerian_graphs_are_fully_traversed(g):
    residual = g.without(parity_forest(g).edges)
    for comp in components(residual):
        if comp.edge_count == 0:
            continue
        sub = ColorClassGraph.from_edges(
            g.n, [e for e in residual.edges if e[0] in comp.vertices], residual.color
        )
        assert longest_trail_exact(sub).best == comp.edge_count
        assert longest_circuit_exact(sub).best == comp.edge_count


def test_cycle_is_its_own_longest_circuit():
    for n in range(3, 9):
        assert longest_circuit_exact(cycle(n)).best == n


def test_coloring_from_index():
    c = coloring_from_index(3, 0b10)
    assert c.colors.tolist() == [0, 0, 1]
    assert coloring_from_index(4, 0).colors.tolist() == [0] * 6


@pytest.mark.parametrize("n,trail,circuit", [(1, 0, 0), (2, 1, 0), (3, 2, 0), (4, 3, 0), (5, 4, 3)])
def test_worst_case_small(n, trail, circuit):
    w = worst_case_search(n, "trail")
    assert w.value == trail
    assert w.value >= n - 1
    assert verify(w.coloring, w.witness) and w.witness.length == trail
    assert best_monochromatic(w.coloring, "trail").best == trail
    assert worst_case_search(n, "circuit").value == circuit


def test_worst_case_swap_symmetry():
    # sampled: the colour swap never changes the best monochromatic value
    for idx in range(0, 1 << 9, 7):
        c = coloring_from_index(5, idx)
        assert best_monochromatic(c).best == best_monochromatic(c.swapped()).best
    # and enumerating both halves gives the same minimum
    full = min(best_monochromatic(EdgeColoring(4, 2, [(i >> j) & 1 for j in range(6)])).best
               for i in range(1 << 6))
    assert full == worst_case_search(4).value


def test_worst_case_parallel_matches_sequential():
    a = worst_case_search(5, "trail")
    b = worst_case_search(5, "trail", workers=2)
    assert (a.value, a.index, a.witness) == (b.value, b.index, b.witness)


def test_solve_never_beats_oracle_on_small_random():
    for idx in range(0, 1 << 9, 3):
        c = coloring_from_index(5, idx)
        r = solve(c)
        assert verify(c, r.circuit)
        assert r.length <= best_monochromatic(c, "circuit").best
