"""Exhaustive certification of markings, and the hat-guessing reading of a marking.

A marking of [k]^n is a strategy for n players wearing hats of k colors:
player ``d`` sees every hat but their own, which fixes a line of direction
``d``, and guesses the free coordinate of that line's marked point.  The
number of correct guesses under a hat assignment is the mark count of the
assignment's point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .feasibility import Params, feasibility
from .grid import DEFAULT_CELL_CAP, Marking, check_cells, point_index

MAX_REPORTED_VIOLATIONS = 10


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    histogram: dict[int, int]
    count_a: int
    count_b: int
    expected_s: int | None
    expected_t: int | None
    num_violations: int
    violations: list[tuple[int, int]] = field(default_factory=list)

    def render(self) -> str:
        lines = [
            f"ok={'true' if self.ok else 'false'}",
            f"count_a={self.count_a}",
            f"count_b={self.count_b}",
            f"expected_s={'none' if self.expected_s is None else self.expected_s}",
            f"expected_t={'none' if self.expected_t is None else self.expected_t}",
            f"violations={self.num_violations}",
        ]
        lines += [f"violation point={idx} marks={c}" for idx, c in self.violations]
        return "\n".join(lines) + "\n"


def mark_counts(m: Marking, cap: int | None = DEFAULT_CELL_CAP) -> np.ndarray:
    """Number of lines marking each point, indexed by point index."""
    check_cells(m.k, m.n, cap)
    counts = np.bincount(m.marked_indices().ravel(), minlength=m.k**m.n)
    return counts.astype(np.uint16)


def verify(m: Marking, p: Params | None = None, cap: int | None = DEFAULT_CELL_CAP) -> VerifyReport:
    """Count marks at every point and compare against (a, b) and the forced (s, t).

    ``p`` defaults to the parameters claimed by the marking.
    """
    if p is None:
        if m.a is None or m.b is None:
            raise ValueError("marking carries no (a, b) claim; pass Params explicitly")
        p = Params(m.k, m.n, m.a, m.b)
    if (p.k, p.n) != (m.k, m.n):
        raise ValueError(f"marking is on [{m.k}]^{m.n}, params are for [{p.k}]^{p.n}")
    counts = mark_counts(m, cap)
    values, freq = np.unique(counts, return_counts=True)
    histogram = {int(v): int(f) for v, f in zip(values, freq)}

    count_a = histogram.get(p.a, 0)
    count_b = histogram.get(p.b, 0) if p.b != p.a else 0
    bad = (counts != p.a) & (counts != p.b)
    bad_idx = np.flatnonzero(bad)
    violations = [(int(i), int(counts[i])) for i in bad_idx[:MAX_REPORTED_VIOLATIONS]]

    w = feasibility(p)
    ok = (
        w is not None
        and bad_idx.size == 0
        and (count_a, count_b) == (w.s, w.t)
    )
    return VerifyReport(
        ok=ok,
        histogram=histogram,
        count_a=count_a,
        count_b=count_b,
        expected_s=None if w is None else w.s,
        expected_t=None if w is None else w.t,
        num_violations=int(bad_idx.size),
        violations=violations,
    )


def spot_check(m: Marking, a: int, b: int, samples: int = 10_000, seed: int = 0) -> int:
    """Number of sampled points whose count is not a or b.

    This is a fast smoke test for markings too large to count exhaustively;
    it certifies nothing.
    """
    rng = np.random.default_rng(seed)
    pts = rng.integers(0, m.k, size=(samples, m.n))
    c = hat_play_many(m, pts)
    return int(np.count_nonzero((c != a) & (c != b)))


def hat_guess(m: Marking, player: int, others: Sequence[int]) -> int:
    """Player's guess given the other players' hats (in player order, player omitted)."""
    if not 0 <= player < m.n:
        raise ValueError(f"player {player} out of range for n={m.n}")
    if len(others) != m.n - 1:
        raise ValueError(f"expected {m.n - 1} visible hats, got {len(others)}")
    return int(m.marks[player, point_index(others, m.k)])


def hat_play(m: Marking, assignment: Sequence[int]) -> int:
    """Number of players who guess their own hat correctly."""
    if len(assignment) != m.n:
        raise ValueError(f"expected {m.n} hats, got {len(assignment)}")
    hats = list(assignment)
    return sum(
        hat_guess(m, i, hats[:i] + hats[i + 1 :]) == hats[i] for i in range(m.n)
    )


def hat_play_many(m: Marking, assignments) -> np.ndarray:
    """Vectorized :func:`hat_play` over an ``(N, n)`` array of hat assignments."""
    hats = np.asarray(assignments, dtype=np.int64)
    if hats.ndim != 2 or hats.shape[1] != m.n:
        raise ValueError(f"assignments must have shape (N, {m.n})")
    if hats.size and (hats.min() < 0 or hats.max() >= m.k):
        raise ValueError("hat color out of range")
    k = m.k
    idx = hats @ (k ** np.arange(m.n, dtype=np.int64))
    correct = np.zeros(len(hats), dtype=np.int64)
    for d in range(m.n):
        low = k**d
        rank = idx % low + (idx // (low * k)) * low
        correct += m.marks[d][rank] == hats[:, d]
    return correct
