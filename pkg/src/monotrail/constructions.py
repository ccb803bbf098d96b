"""Colouring generators: the tight two-colour split, affine-plane colourings, random."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import EdgeColoring, num_pairs

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class BadN(ValueError):
    pass


class NotPrime(ValueError):
    pass


class BadM(ValueError):
    pass


class SplitMix64:
    """Scalar splitmix64 stream."""

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


def splitmix64_block(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the stream seeded with ``seed``.

    Output i depends only on ``seed + (i+1)*gamma``, so the whole block is
    computed at once; uint64 arithmetic wraps mod 2**64.
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + idx * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


def random_coloring(n: int, k: int, seed: int) -> EdgeColoring:
    """One splitmix64 draw per pair in rank order, colour = draw mod k."""
    if n < 1 or k < 1:
        raise BadN(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    draws = splitmix64_block(seed, num_pairs(n))
    return EdgeColoring(n, k, (draws % np.uint64(k)).astype(np.int64))


def extremal_bipartite_split(n: int) -> EdgeColoring:
    """Blue (1) cliques on ``[0, n//3)`` and ``[n//3, n)``, red (0) between them."""
    if n < 2:
        raise BadN(f"extremal split needs n >= 2, got {n}")
    a = n // 3
    side = np.arange(n) >= a
    u, v = np.triu_indices(n, 1)
    return EdgeColoring(n, 2, (side[u] == side[v]).astype(np.int64))


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldTables:
    q: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int | None, ...]

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def div(self, a: int, b: int) -> int:
        ib = self.inv[b]
        if ib is None:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.q)
        return self.mul[a][ib]


def field_ops(q: int) -> FieldTables:
    """Addition, multiplication, negation and inverse tables of GF(q), q prime."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    r = range(q)
    add = tuple(tuple((a + b) % q for b in r) for a in r)
    mul = tuple(tuple((a * b) % q for b in r) for a in r)
    neg = tuple((-a) % q for a in r)
    inv: list[int | None] = [None] * q
    for a in range(1, q):
        inv[a] = pow(a, -1, q)
    return FieldTables(q, add, mul, neg, tuple(inv))


@dataclass(frozen=True)
class AffinePlaneParams:
    q: int
    m: int = 1

    def __post_init__(self):
        if not is_prime(self.q):
            raise NotPrime(f"plane order {self.q} must be prime")
        if self.m < 1:
            raise BadM(f"blob size must be >= 1, got {self.m}")

    @property
    def n(self) -> int:
        return self.q * self.q * self.m

    @property
    def k(self) -> int:
        return self.q + 1


def affine_point(p: AffinePlaneParams, vertex: int) -> tuple[int, int]:
    """Vertex -> point ``(x, y)`` of AG(2, q); blobs of ``m`` consecutive vertices, row-major."""
    idx = vertex // p.m
    return divmod(idx, p.q)


def line_class(f: FieldTables, a: tuple[int, int], b: tuple[int, int]) -> int:
    """Parallel class of the line through two distinct points.

    Slope ``s`` in GF(q) is class ``s``; vertical lines are class ``q``.
    """
    (x1, y1), (x2, y2) = a, b
    if x1 == x2:
        return f.q
    return f.div(f.sub(y2, y1), f.sub(x2, x1))


def affine_plane_coloring(p: AffinePlaneParams) -> EdgeColoring:
    """Gyarfas-style (q+1)-colouring of K_{q^2 m} with components of order q*m.

    Pairs inside one blob (same point) get colour 0.
    """
    f = field_ops(p.q)
    q = p.q
    # class of every ordered point pair, then lift to vertices
    npts = q * q
    cls = np.zeros((npts, npts), dtype=np.int64)
    pts = [divmod(i, q) for i in range(npts)]
    for i in range(npts):
        for j in range(npts):
            if i != j:
                cls[i, j] = line_class(f, pts[i], pts[j])
    u, v = np.triu_indices(p.n, 1)
    return EdgeColoring(p.n, p.k, cls[u // p.m, v // p.m])
