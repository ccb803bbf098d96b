"""Text formats: ``ecg 1`` colourings and ``cert 1`` circuit certificates.

ecg::

    ecg 1
    <n> <k>
    <u> <v> <c>        # n(n-1)/2 lines, u < v, ascending (u, v)

cert::

    cert 1
    <color> <length> <closed:0|1>
    <v0> <v1> ... <v_length>
"""
from __future__ import annotations

from typing import Iterable, TextIO

import numpy as np

from .circuit import Trail
from .coloring import EdgeColoring, num_pairs


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ints(text: str, lineno: int, count: int, what: str) -> list[int]:
    parts = text.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers ({what}), got {text.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"non-integer field in {text.strip()!r}") from None


def _content_lines(lines: Iterable[str]) -> list[tuple[int, str]]:
    out = [(i + 1, ln.rstrip("\r\n")) for i, ln in enumerate(lines)]
    # trailing blank lines are tolerated, nothing else is
    while out and not out[-1][1].strip():
        out.pop()
    return out


def parse_ecg(lines: Iterable[str]) -> EdgeColoring:
    rows = _content_lines(lines)
    if not rows:
        raise ParseError(1, "empty input, expected 'ecg 1'")
    if rows[0][1].split() != ["ecg", "1"]:
        raise ParseError(1, f"expected header 'ecg 1', got {rows[0][1]!r}")
    if len(rows) < 2:
        raise ParseError(2, "missing '<n> <k>' line")
    n, k = _ints(rows[1][1], 2, 2, "n k")
    if n < 1:
        raise ParseError(2, f"n must be >= 1, got {n}")
    if k < 1:
        raise ParseError(2, f"k must be >= 1, got {k}")
    m = num_pairs(n)
    body = rows[2:]
    colors = np.empty(m, dtype=np.int64)
    u, v = 0, 1
    for i, (lineno, text) in enumerate(body):
        if i >= m:
            raise ParseError(lineno, f"extra line after all {m} pairs of K_{n}")
        a, b, c = _ints(text, lineno, 3, "u v c")
        if not (0 <= a < n and 0 <= b < n) or a >= b:
            raise ParseError(lineno, f"bad pair ({a}, {b}) for n={n}; need 0 <= u < v < n")
        if (a, b) != (u, v):
            if (a, b) < (u, v):
                raise ParseError(lineno, f"duplicate or out-of-order pair ({a}, {b})")
            raise ParseError(lineno, f"gap: expected pair ({u}, {v}), got ({a}, {b})")
        if not 0 <= c < k:
            raise ParseError(lineno, f"colour {c} out of range for k={k}")
        colors[i] = c
        v += 1
        if v == n:
            u += 1
            v = u + 1
    if len(body) < m:
        last = rows[-1][0]
        raise ParseError(last + 1, f"truncated: expected pair ({u}, {v}), {m - len(body)} pairs missing")
    return EdgeColoring(n, k, colors)


def read_ecg(path) -> EdgeColoring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ecg(fh)


def format_ecg(c: EdgeColoring) -> str:
    u, v = c.endpoints
    body = "\n".join(
        f"{a} {b} {col}" for a, b, col in zip(u.tolist(), v.tolist(), c.colors.tolist())
    )
    head = f"ecg 1\n{c.n} {c.k}\n"
    return head + body + ("\n" if body else "")


def write_ecg(c: EdgeColoring, out: TextIO | str) -> None:
    text = format_ecg(c)
    if isinstance(out, str):
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def parse_cert(lines: Iterable[str]) -> Trail:
    rows = _content_lines(lines)
    if not rows or rows[0][1].split() != ["cert", "1"]:
        raise ParseError(1, "expected header 'cert 1'")
    if len(rows) < 3:
        raise ParseError(len(rows) + 1, "certificate needs a '<color> <length> <closed>' line and a vertex line")
    if len(rows) > 3:
        raise ParseError(rows[3][0], "unexpected extra line")
    color, length, closed = _ints(rows[1][1], 2, 3, "color length closed")
    if color < 0:
        raise ParseError(2, f"negative colour {color}")
    if length < 0:
        raise ParseError(2, f"negative length {length}")
    if closed not in (0, 1):
        raise ParseError(2, f"closed flag must be 0 or 1, got {closed}")
    verts = _ints(rows[2][1], 3, length + 1, "vertex ids")
    return Trail(color, tuple(verts), bool(closed))


def read_cert(path) -> Trail:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cert(fh)


def format_cert(t: Trail) -> str:
    return (
        f"cert 1\n{t.color} {t.length} {int(t.closed)}\n"
        + " ".join(str(v) for v in t.vertices)
        + "\n"
    )


def write_cert(t: Trail, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_cert(t))
