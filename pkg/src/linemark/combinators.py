"""Combinators that turn certified markings into larger ones."""

from __future__ import annotations

import numpy as np

from .constructions import unit_marking
from .errors import PreconditionError
from .feasibility import Params
from .grid import DEFAULT_CELL_CAP, Marking, axis_values, base_slice, check_cells
from .verify import verify


def _certified(m: Marking, a: int | None, b: int | None, cap) -> tuple[int, int]:
    a = m.a if a is None else a
    b = m.b if b is None else b
    if a is None or b is None:
        raise PreconditionError("input marking carries no (a, b) claim")
    report = verify(m, Params(m.k, m.n, a, b), cap)
    if not report.ok:
        raise PreconditionError(
            f"input does not verify as [{a},{b}]_{m.k}^{m.n} "
            f"({report.num_violations} violating points)"
        )
    return a, b


def lift(m: Marking, a: int | None = None, b: int | None = None,
         cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """[a,b]_k^n -> [a+1,b+1]_k^(n+k).

    The old directions keep their marks and ignore the k new coordinates; the
    new block carries a unit marking that ignores the old coordinates, so
    every point gains exactly one mark.
    """
    a, b = _certified(m, a, b, cap)
    k, n = m.k, m.n
    n2 = n + k
    check_cells(k, n2, cap)
    grids = []
    for d in range(n):
        g = m.direction_grid(d)
        grids.append(g.reshape(g.shape + (1,) * k))
    unit = unit_marking(k)
    for e in range(k):
        g = unit.direction_grid(e)
        grids.append(g.reshape((1,) * n + g.shape))
    return Marking.from_direction_grids(k, n2, grids, a + 1, b + 1)


def scale(m: Marking, r: int, a: int | None = None, b: int | None = None,
          cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """[a,b]_k^n -> [ra,rb]_k^(rn).

    Coordinates come in r blocks of n; coordinate i of block j is axis
    ``j*n + i``.  A point projects to the coordinatewise block sum mod k, and
    each line of the big grid projects bijectively onto a line of the small
    one.  The line marks the point projecting onto the small line's mark, so
    every point is marked r times as often as its projection.
    """
    if r < 1:
        raise ValueError(f"scale factor must be positive, got {r}")
    a, b = _certified(m, a, b, cap)
    k, n = m.k, m.n
    if r == 1:
        return Marking(k, n, m.marks, a, b)
    n2 = r * n
    check_cells(k, n2, cap)
    proj = []
    for i in range(n):
        acc = np.zeros([1] * n2, dtype=np.int64)
        for j in range(r):
            acc = acc + axis_values(k, n2, j * n + i)
        proj.append((acc % k).astype(np.int16))

    targets = []
    for i in range(n):
        # rank of the projected line of direction i, from the other projected coordinates
        rank = np.zeros([1] * n2, dtype=np.int64)
        pos = 0
        for i2 in range(n):
            if i2 != i:
                rank = rank + proj[i2].astype(np.int64) * k**pos
                pos += 1
        targets.append(m.marks[i][rank].astype(np.int16))

    grids = []
    for j in range(r):
        for i in range(n):
            others = base_slice(proj[i], j * n + i)
            grids.append((targets[i] - others) % k)
    return Marking.from_direction_grids(k, n2, grids, r * a, r * b)
