"""Edge-coloured complete graphs and their per-colour structure.

Vertices are ``0..n-1``. Every unordered pair ``{u, v}`` is stored once,
normalised to ``u < v`` and ranked in ascending ``(u, v)`` order, so a
colouring of K_n is just a dense array of ``n(n-1)/2`` colour indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

import numpy as np


class ColoringError(ValueError):
    """Base class for invalid colourings."""


class MissingEdge(ColoringError):
    pass


class ColorOutOfRange(ColoringError):
    pass


class NotSimple(ColoringError):
    """Loop, duplicate or out-of-range edge handed to a graph constructor."""


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_rank(n: int, u: int, v: int) -> int:
    """Rank of the pair ``{u, v}`` in ascending ``(u, v)`` order."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def pair_ranks(n: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Vectorised :func:`pair_rank`; inputs need not be ordered."""
    a = np.minimum(u, v).astype(np.int64)
    b = np.maximum(u, v).astype(np.int64)
    return a * (2 * n - a - 1) // 2 + (b - a - 1)


def pair_endpoints(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All pairs of K_n as two arrays ``(u, v)`` in rank order."""
    u, v = np.triu_indices(n, 1)
    return u.astype(np.int64), v.astype(np.int64)


Assignment = Union[Mapping[tuple[int, int], int], Callable[[int, int], int]]


class EdgeColoring:
    """A k-colouring of the edges of K_n.

    Immutable once built; ``colors[pair_rank(n, u, v)]`` is the colour of
    ``{u, v}``.
    """

    def __init__(self, n: int, k: int, colors: np.ndarray | Sequence[int]):
        if n < 1:
            raise ColoringError(f"n must be >= 1, got {n}")
        if k < 1:
            raise ColoringError(f"k must be >= 1, got {k}")
        arr = np.asarray(colors, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] != num_pairs(n):
            raise MissingEdge(
                f"expected {num_pairs(n)} pair colours for n={n}, got shape {arr.shape}"
            )
        if arr.size and (arr.min() < 0 or arr.max() >= k):
            bad = int(np.flatnonzero((arr < 0) | (arr >= k))[0])
            raise ColorOutOfRange(f"pair rank {bad} has colour {int(arr[bad])}, k={k}")
        dtype = np.uint8 if k <= 256 else np.int32
        arr = arr.astype(dtype)
        arr.setflags(write=False)
        self.n = n
        self.k = k
        self.colors = arr

    def color_of(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"({u}, {v}) is not an edge of K_{self.n}")
        return int(self.colors[pair_rank(self.n, u, v)])

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, color)`` in rank order."""
        flat = self.colors.tolist()
        i = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, flat[i]
                i += 1

    @cached_property
    def endpoints(self) -> tuple[np.ndarray, np.ndarray]:
        return pair_endpoints(self.n)

    def swapped(self, a: int = 0, b: int = 1) -> "EdgeColoring":
        """Copy with colours ``a`` and ``b`` exchanged."""
        cols = self.colors.astype(np.int64)
        out = cols.copy()
        out[cols == a] = b
        out[cols == b] = a
        return EdgeColoring(self.n, self.k, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and np.array_equal(self.colors, other.colors)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.colors.tobytes()))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self.k})"


def new_coloring(n: int, k: int, assignment: Assignment) -> EdgeColoring:
    """Build a validated colouring from a mapping or a ``(u, v) -> colour`` callable.

    Mapping keys may be given in either orientation but each pair only once.
    """
    if n < 1 or k < 1:
        raise ColoringError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    colors = np.empty(num_pairs(n), dtype=np.int64)
    if callable(assignment):
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                c = assignment(u, v)
                if c is None:
                    raise MissingEdge(f"pair ({u}, {v}) has no colour")
                colors[i] = c
                i += 1
    else:
        seen = np.zeros(num_pairs(n), dtype=bool)
        for (u, v), c in assignment.items():
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ColoringError(f"({u}, {v}) is not a pair of K_{n}")
            r = pair_rank(n, u, v)
            if seen[r]:
                raise ColoringError(f"pair ({min(u, v)}, {max(u, v)}) assigned twice")
            seen[r] = True
            colors[r] = c
        if not seen.all():
            r = int(np.flatnonzero(~seen)[0])
            u, v = (int(x[r]) for x in pair_endpoints(n))
            raise MissingEdge(f"pair ({u}, {v}) has no colour")
    return EdgeColoring(n, k, colors)


def constant_coloring(n: int, k: int, color: int = 0) -> EdgeColoring:
    return EdgeColoring(n, k, np.full(num_pairs(n), color, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class ColorClassGraph:
    """Simple graph on ``0..n-1`` formed by one colour's edges.

    ``src``/``dst`` hold the edges with ``src < dst``, sorted in pair-rank
    order. Treat all arrays as read-only.
    """

    n: int
    color: int
    src: np.ndarray
    dst: np.ndarray
    degree: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(cls, n: int, color: int, src, dst) -> "ColorClassGraph":
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        lo, hi = np.minimum(src, dst), np.maximum(src, dst)
        order = np.argsort(pair_ranks(n, lo, hi), kind="stable") if len(lo) else lo
        lo, hi = lo[order], hi[order]
        deg = np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
        for a in (lo, hi, deg):
            a.setflags(write=False)
        return cls(n, color, lo, hi, deg)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], color: int = 0
    ) -> "ColorClassGraph":
        """Validated construction from an edge list; rejects loops and duplicates."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise NotSimple(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise NotSimple(f"edge ({u}, {v}) outside 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotSimple(f"duplicate edge {key}")
            seen.add(key)
        pairs = sorted(seen)
        src = [p[0] for p in pairs]
        dst = [p[1] for p in pairs]
        return cls.from_arrays(n, color, src, dst)

    @property
    def num_edges(self) -> int:
        return int(self.src.shape[0])

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.src.tolist(), self.dst.tolist()))

    def edge_keys(self) -> np.ndarray:
        return self.src * self.n + self.dst

    def _sorted_ends(self):
        m = self.num_edges
        ends = np.concatenate([self.src, self.dst])
        other = np.concatenate([self.dst, self.src])
        order = np.lexsort((other, ends))
        counts = np.bincount(ends, minlength=self.n)
        bounds = np.cumsum(counts)[:-1]
        eid = np.concatenate([np.arange(m), np.arange(m)])
        return other[order], eid[order], bounds

    def adjacency(self) -> list[list[int]]:
        """Sorted neighbour lists."""
        nb, _, bounds = self._sorted_ends()
        return [a.tolist() for a in np.split(nb, bounds)]

    def incidence(self) -> tuple[list[list[int]], list[list[int]]]:
        """Per vertex, sorted neighbours and the matching edge indices."""
        nb, eid, bounds = self._sorted_ends()
        return (
            [a.tolist() for a in np.split(nb, bounds)],
            [a.tolist() for a in np.split(eid, bounds)],
        )

    def without(self, edges: Iterable[tuple[int, int]]) -> "ColorClassGraph":
        """Copy with the given edges deleted (edges absent from the graph are ignored)."""
        edges = list(edges)
        if not edges:
            return self
        rem = np.array([min(u, v) * self.n + max(u, v) for u, v in edges], dtype=np.int64)
        keep = ~np.isin(self.edge_keys(), rem)
        return ColorClassGraph.from_arrays(self.n, self.color, self.src[keep], self.dst[keep])

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        mask = np.zeros(self.n, dtype=bool)
        mask[list(vertices)] = True
        return int(np.count_nonzero(mask[self.src] & mask[self.dst]))


def color_class(c: EdgeColoring, color: int) -> ColorClassGraph:
    if not 0 <= color < c.k:
        raise ColorOutOfRange(f"colour {color} not in [0, {c.k})")
    u, v = c.endpoints
    sel = c.colors == color
    return ColorClassGraph.from_arrays(c.n, color, u[sel], v[sel])


@dataclass(frozen=True)
class Component:
    color: int
    vertices: tuple[int, ...]
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def root(self) -> int:
        return self.vertices[0]


def component_labels(n: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Union-find over an edge list, vectorised as hook-and-compress rounds.

    Each root hooks onto the smallest root it is joined to, so parent
    pointers only ever decrease and the final label of a vertex is the
    smallest vertex id in its component.
    """
    parent = np.arange(n, dtype=np.int64)
    if len(src) == 0:
        return parent
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    while True:
        ps, pd = parent[src], parent[dst]
        live = ps != pd
        if not live.any():
            return parent
        ps, pd = ps[live], pd[live]
        np.minimum.at(parent, np.maximum(ps, pd), np.minimum(ps, pd))
        while True:
            grand = parent[parent]
            if np.array_equal(grand, parent):
                break
            parent = grand


def components(g: ColorClassGraph) -> list[Component]:
    """Connected components, sorted by edge count desc, order desc, smallest id asc."""
    n = g.n
    if n == 0:
        return []
    labels = component_labels(n, g.src, g.dst)
    ecount = np.bincount(labels[g.src], minlength=n) if g.num_edges else np.zeros(n, np.int64)
    vcount = np.bincount(labels, minlength=n)
    roots = np.flatnonzero(vcount)
    order = np.lexsort((roots, -vcount[roots], -ecount[roots]))
    roots = roots[order]
    by_label = np.argsort(labels, kind="stable")
    starts = np.concatenate([[0], np.cumsum(vcount)])
    out = []
    for r in roots.tolist():
        verts = by_label[starts[r]:starts[r + 1]]
        out.append(Component(g.color, tuple(verts.tolist()), int(ecount[r])))
    return out


def largest_component(g: ColorClassGraph, by: str = "edges") -> Component:
    """First component under the :func:`components` order, or by vertex count."""
    comps = components(g)
    if by == "edges":
        return comps[0]
    if by == "order":
        return min(comps, key=lambda cp: (-cp.vertex_count, cp.root))
    raise ValueError(f"unknown key {by!r}")


@dataclass(frozen=True)
class DegreeParity:
    odd: tuple[bool, ...]

    @property
    def odd_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, o in enumerate(self.odd) if o)

    @property
    def all_even(self) -> bool:
        return not any(self.odd)

    def __getitem__(self, v: int) -> bool:
        return self.odd[v]


def degree_parity(g: ColorClassGraph) -> DegreeParity:
    return DegreeParity(tuple(bool(x) for x in (g.degree % 2).tolist()))


@dataclass(frozen=True)
class ComponentMaxima:
    per_color: tuple[int, ...]
    global_max: int
    color: int
    component: Component


def max_component_edges(c: EdgeColoring) -> ComponentMaxima:
    """Largest component edge count per colour, plus the global winner.

    Ties for the global maximum go to the lowest colour.
    """
    best: Component | None = None
    per = []
    for col in range(c.k):
        top = components(color_class(c, col))[0]
        per.append(top.edge_count)
        if best is None or top.edge_count > best.edge_count:
            best = top
    assert best is not None
    return ComponentMaxima(tuple(per), best.edge_count, best.color, best)
