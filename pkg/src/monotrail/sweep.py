"""Batch runs over colouring families, one CSV row per instance."""
from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Optional

from .circuit import case_diagnose, check_trail, solve
from .coloring import EdgeColoring, max_component_edges
from .constructions import extremal_bipartite_split, random_coloring

FAMILIES = ("extremal", "random")


class CertificateFailure(RuntimeError):
    """A certificate produced by ``solve`` did not verify."""


@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    family: str
    seed: int
    circuit_len: int
    threshold: int
    max_comp_edges: int
    n1: Optional[int]
    case: str
    runtime_ms: int


HEADER = [f.name for f in fields(SweepRow)]


def make_coloring(family: str, n: int, k: int, seed: int) -> EdgeColoring:
    if family == "extremal":
        return extremal_bipartite_split(n)
    if family == "random":
        return random_coloring(n, k, seed)
    raise ValueError(f"unknown family {family!r}")


def run_instance(family: str, n: int, k: int, seed: int, timing: bool = False) -> SweepRow:
    t0 = time.perf_counter()
    c = make_coloring(family, n, k, seed)
    report = solve(c)
    code = check_trail(c, report.circuit)
    if code is not None:
        raise CertificateFailure(f"{family} n={n} k={c.k} seed={seed}: {code}")
    top = max_component_edges(c).global_max
    if c.k == 2:
        diag = case_diagnose(c, report.eulerized)
        n1, case = diag.n1, diag.case
    else:
        n1, case = None, ""
    ms = round((time.perf_counter() - t0) * 1000) if timing else 0
    return SweepRow(n, c.k, family, seed, report.length, report.threshold, top, n1, case, ms)


def _run(args) -> SweepRow:
    return run_instance(*args)


def run_sweep(
    family: str,
    ns: Iterable[int],
    seeds: Iterable[int],
    k: int = 2,
    threads: int = 1,
    timing: bool = False,
) -> list[SweepRow]:
    """Rows ordered by (n, seed) whatever the worker count.

    The extremal family is deterministic, so it gets a single row per n
    with seed 0.
    """
    seeds = list(seeds)
    if family == "extremal":
        seeds = [0]
        k = 2
    tasks = [(family, n, k, s, timing) for n in sorted(ns) for s in sorted(seeds)]
    if threads <= 1 or len(tasks) <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_run, tasks))


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in rows:
        w.writerow(["" if x is None else x for x in astuple(r)])
    return buf.getvalue()


def inversion_deviation(n: int, ell: int) -> float:
    """Relative gap between n and 3*sqrt(ell/2), the inverted two-colour bound."""
    return abs(n - 3 * math.sqrt(ell / 2)) / n


def summarize(rows: list[SweepRow], n_floor: int = 90) -> dict[str, float]:
    out: dict[str, float] = {}
    ext = [r for r in rows if r.family == "extremal"]
    if ext:
        out["max_rel_dev_2n2_9"] = max(
            abs(r.max_comp_edges - 2 * r.n ** 2 / 9) / (2 * r.n ** 2 / 9) for r in ext
        )
        big = [r for r in ext if r.n >= n_floor]
        if big:
            out[f"max_rel_dev_inversion_n>={n_floor}"] = max(
                inversion_deviation(r.n, r.max_comp_edges) for r in big
            )
    if rows:
        out["below_threshold"] = sum(r.circuit_len < r.threshold for r in rows)
    return out
