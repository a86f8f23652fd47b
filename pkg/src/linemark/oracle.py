"""Brute-force existence decider for tiny grids.

Lines are decided in canonical order (direction-major, ascending rank) and
digits are tried in ascending order, so results are reproducible.  A partial
marking is abandoned as soon as some point on the line just decided can no
longer end up with exactly a or b marks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .feasibility import Params
from .grid import Marking, color_dtype


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 10_000_000
    max_seconds: float = 60.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found", "none", "exhausted"
    marking: Marking | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def _line_points(k: int, n: int) -> list[list[int]]:
    out = []
    for d in range(n):
        low = k**d
        for rank in range(k ** (n - 1)):
            base = rank % low + (rank // low) * low * k
            out.append([base + v * low for v in range(k)])
    return out


def search(p: Params, lim: SearchLimits = SearchLimits()) -> SearchResult:
    k, n, a, b = p.k, p.n, p.a, p.b
    lines = _line_points(k, n)
    L = len(lines)
    count = [0] * k**n
    remaining = [n] * k**n
    choice = [-1] * L
    deadline = time.monotonic() + lim.max_seconds
    nodes = 0

    def ok_after(pts) -> bool:
        for q in pts:
            c, rem = count[q], remaining[q]
            if c > b or c + rem < a:
                return False
            if a < c < b and c + rem < b:
                return False
            if rem == 0 and c != a and c != b:
                return False
        return True

    # Translating every point along direction 0 maps valid markings to valid
    # markings and moves the first line's mark anywhere, so fix it to 0.
    first_max = 0
    depth = 0
    while True:
        if depth == L:
            marks = np.array(choice, dtype=color_dtype(k)).reshape(n, k ** (n - 1))
            return SearchResult("found", Marking(k, n, marks, a, b), nodes)
        pts = lines[depth]
        prev = choice[depth]
        if prev >= 0:
            count[pts[prev]] -= 1
        else:
            for q in pts:
                remaining[q] -= 1
        top = first_max if depth == 0 else k - 1
        v = prev + 1
        while v <= top:
            nodes += 1
            count[pts[v]] += 1
            if ok_after(pts):
                break
            count[pts[v]] -= 1
            v += 1
        if nodes > lim.max_nodes or time.monotonic() > deadline:
            return SearchResult("exhausted", None, nodes)
        if v <= top:
            choice[depth] = v
            depth += 1
            continue
        # backtrack
        choice[depth] = -1
        for q in pts:
            remaining[q] += 1
        depth -= 1
        if depth < 0:
            return SearchResult("none", None, nodes)
