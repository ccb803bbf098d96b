"""Long monochromatic circuits: extraction, certificates and proof diagnostics.

``solve`` Eulerizes every colour class, takes the residual component with
the most edges and returns an Euler circuit of it. Everything else here
either checks that certificate or evaluates, on a concrete instance, the
counting steps that guarantee it is long.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .coloring import (
    ColorClassGraph,
    Component,
    EdgeColoring,
    color_class,
    component_labels,
    components,
    pair_ranks,
)
from .eulerize import EulerizedColoring, eulerize

RED, BLUE = 0, 1
SLACK = 2

# verify() failure codes
BAD_VERTEX = "BadVertex"
NOT_A_WALK = "NotAWalk"
BAD_COLOR = "BadColor"
REPEATED_EDGE = "RepeatedEdge"
BAD_CLOSURE = "BadClosure"


class CircuitError(ValueError):
    pass


class NotEven(CircuitError):
    pass


class NotConnected(CircuitError):
    pass


class EmptyComponent(CircuitError):
    pass


class BadK(ValueError):
    pass


@dataclass(frozen=True)
class Trail:
    """Walk ``vertices[0] .. vertices[-1]`` in one colour.

    ``closed`` is stored rather than derived so that foreign certificates
    with an inconsistent flag can be represented and rejected by ``verify``.
    """

    color: int
    vertices: tuple[int, ...]
    closed: bool

    @classmethod
    def walk(cls, color: int, vertices: Sequence[int]) -> "Trail":
        vs = tuple(int(v) for v in vertices)
        return cls(color, vs, len(vs) > 1 and vs[0] == vs[-1])

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def __len__(self) -> int:
        return self.length


def euler_circuit(g: ColorClassGraph, component: Component) -> Trail:
    """Hierholzer circuit through every edge of ``component``.

    Starts and ends at the component's smallest vertex and always follows
    the smallest unused neighbour.
    """
    verts = sorted(component.vertices)
    if not verts:
        raise EmptyComponent("component has no vertices")
    inside = np.zeros(g.n, dtype=bool)
    inside[verts] = True
    keep = inside[g.src] & inside[g.dst]
    sub = ColorClassGraph.from_arrays(g.n, g.color, g.src[keep], g.dst[keep])
    m = sub.num_edges
    if m == 0:
        raise EmptyComponent(f"component rooted at {verts[0]} has no edges")
    deg = sub.degree.tolist()
    for v in verts:
        if deg[v] & 1:
            raise NotEven(f"vertex {v} has odd degree {deg[v]}")
        if deg[v] == 0:
            raise NotConnected(f"vertex {v} is isolated inside the component")

    nbrs, eids = sub.incidence()
    used = [False] * m
    ptr = [0] * g.n
    start = verts[0]
    stack = [start]
    out = []
    while stack:
        v = stack[-1]
        row = eids[v]
        i = ptr[v]
        end = len(row)
        while i < end and used[row[i]]:
            i += 1
        if i == end:
            ptr[v] = i
            out.append(stack.pop())
        else:
            used[row[i]] = True
            ptr[v] = i + 1
            stack.append(nbrs[v][i])
    if len(out) - 1 != m:
        raise NotConnected(f"circuit from {start} reached {len(out) - 1} of {m} edges")
    out.reverse()
    return Trail(g.color, tuple(out), True)


def check_trail(c: EdgeColoring, t: Trail) -> Optional[str]:
    """First failure code for ``t`` as a trail of ``c``, or None if it is valid."""
    vs = np.asarray(t.vertices, dtype=np.int64)
    if vs.size == 0 or (vs.min() < 0) or (vs.max() >= c.n):
        return BAD_VERTEX
    if not 0 <= t.color < c.k:
        return BAD_COLOR
    if vs.size > 1:
        a, b = vs[:-1], vs[1:]
        loop = a == b
        ranks = pair_ranks(c.n, a, b)
        safe = np.where(loop, 0, ranks)
        wrong = ~loop & (c.colors[safe].astype(np.int64) != t.color)
        order = np.argsort(ranks, kind="stable")
        dup_sorted = np.zeros(ranks.size, dtype=bool)
        dup_sorted[1:] = ranks[order][1:] == ranks[order][:-1]
        repeated = np.zeros(ranks.size, dtype=bool)
        repeated[order] = dup_sorted
        repeated &= ~loop
        bad = loop | wrong | repeated
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            if loop[i]:
                return NOT_A_WALK
            if wrong[i]:
                return BAD_COLOR
            return REPEATED_EDGE
    is_closed = vs.size > 1 and vs[0] == vs[-1]
    if bool(t.closed) != bool(is_closed):
        return BAD_CLOSURE
    return None


def verify(c: EdgeColoring, t: Trail) -> bool:
    return check_trail(c, t) is None


@dataclass(frozen=True)
class Threshold:
    value: int
    n_min: int


def _floor_bound(coef: Fraction, slack: Fraction, n: int) -> int:
    """floor(coef*n^2 - slack*n^1.5), clamped at 0, computed exactly."""
    x = coef * n * n

    def fits(t: int) -> bool:
        d = x - t
        return d >= 0 and d * d >= slack * slack * n ** 3

    t = math.floor(float(x) - float(slack) * n ** 1.5)
    while not fits(t):
        t -= 1
    while fits(t + 1):
        t += 1
    return max(t, 0)


def _coefficient(k: int) -> Fraction:
    return Fraction(2, 9) if k == 2 else Fraction(1, 8 * k * k)


def guarantee_threshold(n: int, k: int, slack: float | Fraction = SLACK) -> Threshold:
    """Length every k-colouring of K_n is guaranteed to beat, with its validity floor.

    ``value`` is ``floor(2n^2/9 - slack*n^1.5)`` for two colours and
    ``floor(n^2/(8k^2) - slack*n^1.5)`` otherwise, clamped at 0. ``n_min``
    is the first n at which that value becomes positive.
    """
    if k < 2:
        raise BadK(f"threshold needs k >= 2, got {k}")
    coef = _coefficient(k)
    s = Fraction(slack)
    value = _floor_bound(coef, s, n)
    # positive roughly once n > (slack/coef)^2
    guess = int(float(s / coef) ** 2)
    n_min = max(1, guess - 2)
    while _floor_bound(coef, s, n_min) <= 0:
        n_min += 1
    return Threshold(value, n_min)


@dataclass(frozen=True)
class SolveReport:
    color: int
    component: Optional[Component]
    circuit: Trail
    removed: tuple[int, ...]
    threshold: int
    eulerized: EulerizedColoring = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return self.circuit.length

    @property
    def satisfied(self) -> bool:
        return self.length >= self.threshold


def best_residual_component(e: EulerizedColoring) -> Optional[Component]:
    best = None
    best_key = None
    for col, g in enumerate(e.residual):
        for comp in components(g):
            key = (-comp.edge_count, col, comp.root)
            if best_key is None or key < best_key:
                best, best_key = comp, key
    if best is None or best.edge_count == 0:
        return None
    return best


def solve(c: EdgeColoring, slack: float | Fraction = SLACK) -> SolveReport:
    """Euler circuit of the largest residual component after Eulerizing every colour."""
    e = eulerize(c)
    comp = best_residual_component(e)
    threshold = guarantee_threshold(c.n, c.k, slack).value if c.k >= 2 else 0
    if comp is None:
        return SolveReport(0, None, Trail(0, (0,), False), e.removed, threshold, e)
    circuit = euler_circuit(e.residual[comp.color], comp)
    return SolveReport(comp.color, comp, circuit, e.removed, threshold, e)


# ---------------------------------------------------------------------------
# case analysis for two colours

@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: float
    rhs: float
    holds: bool

    @classmethod
    def ge(cls, name: str, lhs, rhs) -> "Inequality":
        return cls(name, float(lhs), float(rhs), lhs >= rhs)

    def __str__(self) -> str:
        flag = "ok" if self.holds else "FAIL"
        return f"{self.name}: {_fmt(self.lhs)} >= {_fmt(self.rhs)} [{flag}]"


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.3f}"


def case_label(n: int, n1: int) -> str:
    """Case of the two-colour argument, tested in order A, B, C, D with exact arithmetic."""
    if 3 * n1 < n:
        return "A"
    if 3 * n1 <= 2 * n:
        return "B"
    if n1 <= n and (n - n1) ** 2 >= 4 * n:
        return "C"
    return "D"


@dataclass(frozen=True)
class CaseTrace:
    n: int
    n1: int
    case: str
    eulerized: bool
    swapped_n1: int
    swapped_case: str
    v1: Optional[tuple[int, ...]] = None
    inequalities: tuple[Inequality, ...] = ()
    hypothesis_met: Optional[bool] = None
    best_edges: Optional[int] = None

    def lines(self) -> list[str]:
        out = [f"n1={self.n1} case={self.case}"]
        out.append(f"swapped: n1={self.swapped_n1} case={self.swapped_case}")
        if self.v1 is not None:
            out.append(f"|V1|={len(self.v1)}")
        if self.hypothesis_met is not None:
            out.append("hypothesis " + ("met" if self.hypothesis_met else "not-met"))
        out.extend(str(q) for q in self.inequalities)
        if self.best_edges is not None:
            out.append(f"best component edges={self.best_edges}")
        return out


def _two_colour_graphs(
    c: EdgeColoring, eulerized: bool | EulerizedColoring
) -> tuple[ColorClassGraph, ColorClassGraph]:
    if c.k != 2:
        raise BadK(f"case analysis is for two colours, got k={c.k}")
    if isinstance(eulerized, EulerizedColoring):
        return eulerized.residual[RED], eulerized.residual[BLUE]
    if eulerized:
        e = eulerize(c)
        return e.residual[RED], e.residual[BLUE]
    return color_class(c, RED), color_class(c, BLUE)


def _largest_by_order(g: ColorClassGraph) -> Component:
    return min(components(g), key=lambda cp: (-cp.vertex_count, cp.root))


def case_diagnose(c: EdgeColoring, eulerized: bool | EulerizedColoring = True) -> CaseTrace:
    """n1 (order of the largest blue component) and the case it falls in.

    By default the graphs are the Eulerized colour classes; ``eulerized=False``
    reads the raw colouring instead, and an already computed
    ``EulerizedColoring`` of ``c`` can be passed to skip recomputing it.
    Also reports the diagnosis with the colours exchanged.
    """
    red, blue = _two_colour_graphs(c, eulerized)
    n1 = _largest_by_order(blue).vertex_count
    r1 = _largest_by_order(red).vertex_count
    return CaseTrace(c.n, n1, case_label(c.n, n1), bool(eulerized), r1, case_label(c.n, r1))


def _component_of(g: ColorClassGraph, v: int) -> tuple[np.ndarray, int]:
    """(vertex mask, edge count) of the component of g containing v."""
    labels = component_labels(g.n, g.src, g.dst)
    mask = labels == labels[v]
    return mask, int(np.count_nonzero(mask[g.src]))


def proof_trace(
    c: EdgeColoring, eulerized: bool | EulerizedColoring = True, slack: float = SLACK
) -> CaseTrace:
    """Evaluate every counting step of the two-colour argument on ``c``.

    Purely diagnostic: inequalities that fail on small or unusual inputs
    are recorded as failing, never raised.
    """
    red, blue = _two_colour_graphs(c, eulerized)
    n = c.n
    rt = math.sqrt(n)
    u1 = _largest_by_order(blue)
    n1 = u1.vertex_count
    red1 = _largest_by_order(red)
    case = case_label(n, n1)
    target = 2 * n * n / 9 - slack * n ** 1.5
    ineq: list[Inequality] = []

    in_u = np.zeros(n, dtype=bool)
    in_u[list(u1.vertices)] = True
    _, blue_u1_edges = _component_of(blue, u1.root)
    base = dict(
        n=n, n1=n1, case=case, eulerized=bool(eulerized),
        swapped_n1=red1.vertex_count, swapped_case=case_label(n, red1.vertex_count),
    )

    if case == "D":
        # largest red component order > n - 2 sqrt(n)
        met = (n - red1.vertex_count) ** 2 < 4 * n
        if not met:
            ineq.append(Inequality.ge("fallback: largest blue component edges", blue_u1_edges, target))
            return CaseTrace(**base, inequalities=tuple(ineq), hypothesis_met=False,
                             best_edges=blue_u1_edges)
        in_r = np.zeros(n, dtype=bool)
        in_r[list(red1.vertices)] = True
        both = in_u & in_r
        inter = (
            int(np.count_nonzero(both[red.src] & both[red.dst]))
            + int(np.count_nonzero(both[blue.src] & both[blue.dst]))
        )
        _, red1_edges = _component_of(red, red1.root)
        best = max(red1_edges, blue_u1_edges)
        ineq.append(Inequality.ge("edges inside both largest components", inter,
                                  n * (n - 1) / 2 - 4 * n ** 1.5 - 2 * n))
        ineq.append(Inequality.ge("larger of the two components (pigeonhole)", best, inter / 2))
        ineq.append(Inequality.ge("larger component vs n^2/4", best, n * n / 4 - slack * n ** 1.5))
        ineq.append(Inequality.ge("larger component vs 2n^2/9", best, target))
        return CaseTrace(**base, inequalities=tuple(ineq), hypothesis_met=True, best_edges=best)

    # cases A, B, C: the red bipartite graph between U1 and its complement
    rest = n - n1
    cross = in_u[red.src] != in_u[red.dst]
    bs, bd = red.src[cross], red.dst[cross]
    ineq.append(Inequality.ge("red edges between U1 and complement", int(bs.size),
                              n1 * rest - 2 * n))
    outside_end = np.where(in_u[bs], bd, bs)
    maxdeg = int(np.bincount(outside_end, minlength=n).max()) if bs.size else 0
    if rest > 0:
        ineq.append(Inequality.ge("max red degree from complement into U1", maxdeg,
                                  n1 - 2 * n / rest))
        ineq.append(Inequality.ge("degree bound vs n1 - sqrt(n)", n1 - 2 * n / rest, n1 - rt))

    labels = component_labels(n, bs, bd)
    u_labels = labels[in_u]
    counts = np.bincount(u_labels, minlength=n)
    lab = int(np.argmax(counts))
    v1_mask = in_u & (labels == lab)
    v1 = tuple(np.flatnonzero(v1_mask).tolist())
    comp_mask = labels == lab
    bip_edges = int(np.count_nonzero(comp_mask[bs]))
    ineq.append(Inequality.ge("|V1| vs n1 - sqrt(n)", len(v1), n1 - rt))
    ineq.append(Inequality.ge("bipartite component edges", bip_edges,
                              (n1 - rt) * rest - 2 * n))
    _, red_v1_edges = _component_of(red, v1[0])

    if case == "A":
        red_total = red.num_edges
        ineq.append(Inequality.ge("red edge count", red_total, 0.5 * n * (2 * n / 3) - 2 * n))
        red_best = components(red)[0].edge_count
        ineq.append(Inequality.ge("largest red component vs 2n^2/9", red_best, target))
        best = red_best
    elif case == "B":
        chain = (n1 - rt) * rest - 2 * n
        ineq.append(Inequality.ge("red component containing V1", red_v1_edges, chain))
        ineq.append(Inequality.ge("case bound vs (n/3 - sqrt(n))2n/3 - 2n", chain,
                                  (n / 3 - rt) * 2 * n / 3 - 2 * n))
        ineq.append(Inequality.ge("red component containing V1 vs 2n^2/9", red_v1_edges, target))
        best = red_v1_edges
    else:
        induced = red.induced_edge_count(u1.vertices) + blue.induced_edge_count(u1.vertices)
        ineq.append(Inequality.ge("edges induced on U1", induced, math.comb(n1, 2) - 2 * n))
        inc_v1 = 0
        for g in (red, blue):
            inside = in_u[g.src] & in_u[g.dst]
            inc_v1 += int(np.count_nonzero(inside & (v1_mask[g.src] | v1_mask[g.dst])))
        ineq.append(Inequality.ge("edges in U1 touching V1", inc_v1,
                                  math.comb(n1, 2) - 2 * n - n))
        v1_cross = int(np.count_nonzero(v1_mask[bs] | v1_mask[bd]))
        combined = inc_v1 + v1_cross
        ineq.append(Inequality.ge("edges touching V1", combined,
                                  math.comb(n1, 2) - 3 * n + (n1 - rt) * rest - 2 * n))
        ineq.append(Inequality.ge("C(n1,2) + n1(n-n1) vs 4n^2/9",
                                  math.comb(n1, 2) + n1 * rest, 4 * n * n / 9 - n))
        best = max(red_v1_edges, blue_u1_edges)
        ineq.append(Inequality.ge("larger of red V1 / blue U1 components (pigeonhole)",
                                  best, combined / 2))
        ineq.append(Inequality.ge("larger component vs 2n^2/9", best, target))
    return CaseTrace(**base, v1=v1, inequalities=tuple(ineq), best_edges=best)


# ---------------------------------------------------------------------------
# peeling

@dataclass(frozen=True)
class PeelReport:
    average_degree: Fraction
    threshold: Fraction
    survivors: tuple[int, ...]
    min_degree: Optional[int]
    edge_count: int


def min_degree_peel(g: ColorClassGraph, d) -> PeelReport:
    """Delete vertices of degree < d, smallest id first, until none is left below d."""
    d = Fraction(d)
    if d < 0:
        raise ValueError("peel threshold must be non-negative")
    n = g.n
    deg = g.degree.tolist()
    adj = g.adjacency()
    alive = [True] * n
    heap = [v for v in range(n) if deg[v] < d]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not alive[v]:
            continue
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < d and deg[w] + 1 >= d:
                    heapq.heappush(heap, w)
    survivors = tuple(v for v in range(n) if alive[v])
    edges = sum(deg[v] for v in survivors) // 2
    avg = Fraction(2 * g.num_edges, n) if n else Fraction(0)
    return PeelReport(avg, d, survivors, min((deg[v] for v in survivors), default=None), edges)
