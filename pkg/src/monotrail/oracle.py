"""Exhaustive ground truth for tiny instances.

Exact longest trail / closed trail by backtracking, and the minimum over
all two-colourings of K_n of the best monochromatic one.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional


from .circuit import Trail
from .coloring import ColorClassGraph, EdgeColoring, color_class, num_pairs, pair_endpoints

MAX_EDGES = 25
MAX_N = 6
MAX_N_FLAGGED = 7


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    best: int
    witness: Trail
    nodes: int


def _incidence(n: int, edges: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        inc[u].append((v, e))
        inc[v].append((u, e))
    for row in inc:
        row.sort()
    return inc


def _upper_bound(n: int, edges: list[tuple[int, int]], closed: bool) -> int:
    """Cheap cap used only to stop early: per component, every odd vertex
    that is not a trail end leaves an unused edge behind."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    ecount: dict[int, int] = {}
    odd: dict[int, int] = {}
    for u, v in edges:
        r = find(u)
        ecount[r] = ecount.get(r, 0) + 1
    for v in range(n):
        if deg[v] & 1:
            r = find(v)
            odd[r] = odd.get(r, 0) + 1
    best = 0
    for r, e in ecount.items():
        o = odd.get(r, 0)
        spare = o // 2 if closed else max(0, (o - 2) // 2)
        best = max(best, e - spare)
    return best


def _longest(n: int, edges: list[tuple[int, int]], closed: bool) -> tuple[int, list[int], int]:
    """(length, vertex sequence, nodes) of a longest trail, or closed trail.

    Starts ascend and neighbours ascend, and a witness is only replaced by
    a strictly longer one, so the witness is the lexicographically least
    maximum. Closed trails are rooted at their smallest vertex and never
    go below it.
    """
    m = len(edges)
    if m == 0:
        return 0, [0], 0
    inc = _incidence(n, edges)
    cap = _upper_bound(n, edges, closed)
    best_len = 0
    best_path = [0]
    used = [False] * m
    path: list[int] = []
    nodes = 0

    def dfs(v: int, depth: int, start: int, avail: int) -> bool:
        nonlocal best_len, best_path, nodes
        nodes += 1
        if closed:
            if depth > best_len and v == start and depth > 0:
                best_len, best_path = depth, path.copy()
                if best_len >= cap:
                    return True
        elif depth > best_len:
            best_len, best_path = depth, path.copy()
            if best_len >= cap:
                return True
        if depth + avail <= best_len:
            return False
        for w, e in inc[v]:
            if used[e] or (closed and w < start):
                continue
            used[e] = True
            path.append(w)
            done = dfs(w, depth + 1, start, avail - 1)
            path.pop()
            used[e] = False
            if done:
                return True
        return False

    for s in range(n):
        if not inc[s]:
            continue
        avail = m if not closed else sum(1 for u, v in edges if u >= s and v >= s)
        if avail <= best_len:
            continue
        path.append(s)
        done = dfs(s, 0, s, avail)
        path.pop()
        if done:
            break
    return best_len, best_path, nodes


def _check_size(g: ColorClassGraph, limit: int) -> None:
    if g.num_edges > limit:
        raise TooLarge(f"{g.num_edges} edges exceeds the exhaustive-search guard of {limit}")


def longest_trail_exact(g: ColorClassGraph, limit: int = MAX_EDGES) -> OracleResult:
    _check_size(g, limit)
    length, path, nodes = _longest(g.n, g.edges, closed=False)
    return OracleResult(length, Trail.walk(g.color, path), nodes)


def longest_circuit_exact(g: ColorClassGraph, limit: int = MAX_EDGES) -> OracleResult:
    _check_size(g, limit)
    length, path, nodes = _longest(g.n, g.edges, closed=True)
    return OracleResult(length, Trail.walk(g.color, path), nodes)


# ---------------------------------------------------------------------------
# worst case over all two-colourings

@dataclass(frozen=True)
class WorstCase:
    n: int
    mode: str
    value: int
    index: int
    coloring: EdgeColoring
    witness: Trail
    colorings: int


def coloring_from_index(n: int, index: int) -> EdgeColoring:
    """Pair of rank 0 is colour 0; pair of rank j >= 1 takes bit j-1 of ``index``."""
    m = num_pairs(n)
    cols = [0] * m
    for j in range(1, m):
        cols[j] = (index >> (j - 1)) & 1
    return EdgeColoring(n, 2, cols)


def _scan(n: int, closed: bool, lo: int, hi: int) -> tuple[int, int]:
    """Smallest (value, index) over coloring indices in [lo, hi)."""
    us, vs = pair_endpoints(n)
    pairs = list(zip(us.tolist(), vs.tolist()))
    m = len(pairs)
    best_val, best_idx = None, None
    for idx in range(lo, hi):
        mask = idx << 1
        classes = ([], [])
        for j, p in enumerate(pairs):
            classes[(mask >> j) & 1].append(p)
        caps = [_upper_bound(n, cls, closed) for cls in classes]
        order = sorted(range(2), key=lambda c: -caps[c])
        value = 0
        for c in order:
            if caps[c] <= value:
                continue
            if best_val is not None and value >= best_val:
                break
            got, _, _ = _longest(n, classes[c], closed)
            value = max(value, got)
        if best_val is None or value < best_val:
            best_val, best_idx = value, idx
    assert best_val is not None and m >= 1
    return best_val, best_idx


def worst_case_search(
    n: int, mode: str = "trail", allow_seven: bool = False, workers: int = 1
) -> WorstCase:
    """Minimum over all red/blue colourings of K_n of the longest monochromatic
    trail (or circuit), with the first colouring attaining it.

    Colourings are enumerated with pair {0, 1} fixed to colour 0, which
    covers every colouring up to swapping the two colours.
    """
    if mode not in ("trail", "circuit"):
        raise ValueError(f"mode must be 'trail' or 'circuit', got {mode!r}")
    cap = MAX_N_FLAGGED if allow_seven else MAX_N
    if n > cap:
        raise TooLarge(f"exhaustive search over K_{n} is beyond the guard n <= {cap}")
    if n < 1:
        raise ValueError("n must be >= 1")
    closed = mode == "circuit"
    m = num_pairs(n)
    if m == 0:
        c = EdgeColoring(n, 2, [])
        return WorstCase(n, mode, 0, 0, c, Trail(0, (0,), False), 1)
    total = 1 << (m - 1)
    if workers <= 1 or total < 64:
        value, index = _scan(n, closed, 0, total)
    else:
        step = -(-total // (workers * 4))
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [(n, closed, lo, hi) for lo, hi in bounds]))
        value, index = min(parts)
    coloring = coloring_from_index(n, index)
    witness = best_monochromatic(coloring, mode).witness
    assert witness.length == value
    return WorstCase(n, mode, value, index, coloring, witness, total)


def _scan_chunk(args) -> tuple[int, int]:
    return _scan(*args)


def best_monochromatic(c: EdgeColoring, mode: str = "trail", limit: int = MAX_EDGES) -> OracleResult:
    """Exact longest monochromatic trail or circuit over all colours (lowest colour on ties)."""
    best: Optional[OracleResult] = None
    for col in range(c.k):
        g = color_class(c, col)
        r = longest_circuit_exact(g, limit) if mode == "circuit" else longest_trail_exact(g, limit)
        if best is None or r.best > best.best:
            best = r
    assert best is not None
    return best
