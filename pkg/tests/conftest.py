import itertools

from hypothesis import strategies as st

from monotrail.coloring import ColorClassGraph, EdgeColoring, num_pairs


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return ColorClassGraph.from_edges(n, [p for p, b in zip(pairs, keep) if b])


@st.composite
def colorings(draw, max_n=12, max_k=4):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    cols = draw(st.lists(st.integers(0, k - 1), min_size=num_pairs(n), max_size=num_pairs(n)))
    return EdgeColoring(n, k, cols)


def complete(n, color=0):
    return ColorClassGraph.from_edges(n, itertools.combinations(range(n), 2), color)


def cycle(n, color=0):
    return ColorClassGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], color)
