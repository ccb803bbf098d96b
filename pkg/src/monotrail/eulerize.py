"""Parity-correcting forests: strip an acyclic edge set so every degree is even."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .coloring import ColorClassGraph, EdgeColoring, color_class


@dataclass(frozen=True)
class ParityForest:
    color: int
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.edges)


def parity_forest(g: ColorClassGraph) -> ParityForest:
    """Forest F in g with deg_F(v) = deg_g(v) (mod 2) for every v.

    Per component: BFS tree from the smallest vertex, neighbours in
    ascending order; then walk the non-root vertices in reverse discovery
    order and keep the edge to the parent whenever the vertex still has an
    odd parity deficit. The root balances automatically because every
    component has an even number of odd vertices.
    """
    n = g.n
    deg = g.degree.tolist()
    if not any(d & 1 for d in deg):
        return ParityForest(g.color, ())
    adj = g.adjacency()
    parent = [-1] * n
    seen = [False] * n
    fdeg = [0] * n
    chosen = []
    for root in range(n):
        if seen[root] or not adj[root]:
            continue
        seen[root] = True
        order = []
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
        for v in reversed(order):
            if (deg[v] - fdeg[v]) & 1:
                p = parent[v]
                fdeg[v] += 1
                fdeg[p] += 1
                chosen.append((p, v) if p < v else (v, p))
    return ParityForest(g.color, tuple(sorted(chosen)))


@dataclass(frozen=True)
class EulerizedColoring:
    base: EdgeColoring
    residual: tuple[ColorClassGraph, ...]
    forests: tuple[ParityForest, ...]

    @property
    def removed(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.forests)

    @property
    def total_removed(self) -> int:
        return sum(self.removed)


def eulerize(c: EdgeColoring) -> EulerizedColoring:
    residual = []
    forests = []
    for col in range(c.k):
        g = color_class(c, col)
        f = parity_forest(g)
        forests.append(f)
        residual.append(g.without(f.edges))
    return EulerizedColoring(c, tuple(residual), tuple(forests))
