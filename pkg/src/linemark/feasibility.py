"""The double-counting condition on (k, n, a, b) and the feasibility table."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Params:
    k: int
    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if not 0 <= self.a <= self.b <= self.n:
            raise ValueError(f"need 0 <= a <= b <= n, got a={self.a} b={self.b} n={self.n}")

    def __str__(self):
        return f"[{self.a},{self.b}]_{self.k}^{self.n}"


@dataclass(frozen=True)
class FeasibilityWitness:
    """``s`` points marked ``a`` times and ``t`` points marked ``b`` times."""

    s: int
    t: int


def feasibility(p: Params) -> FeasibilityWitness | None:
    """Return the forced (s, t) counts, or None when they are not nonnegative integers.

    All arithmetic is on Python integers, so nothing overflows.  For ``a == b``
    the instance is feasible exactly when ``n == k*a`` and the witness is
    ``(k**n, 0)`` by convention.
    """
    k, n, a, b = p.k, p.n, p.a, p.b
    if a == b:
        return FeasibilityWitness(k**n, 0) if n == k * a else None
    scale = k ** (n - 1)
    s_num = scale * (k * b - n)
    t_num = scale * (n - k * a)
    if s_num < 0 or t_num < 0:
        return None
    s, rs = divmod(s_num, b - a)
    t, rt = divmod(t_num, b - a)
    if rs or rt:
        return None
    assert s + t == k**n and a * s + b * t == n * scale
    return FeasibilityWitness(s, t)


@dataclass(frozen=True)
class TableRow:
    a: int
    b: int
    witness: FeasibilityWitness | None
    route: str

    @property
    def feasible(self) -> bool:
        return self.witness is not None


def feasible_table(k: int, n: int, include_infeasible: bool = False) -> list[TableRow]:
    """Rows for every 0 <= a < b <= n, with the route the planner would take.

    Only feasible rows are returned unless ``include_infeasible`` is set.
    """
    from .planner import route_of

    rows = []
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            p = Params(k, n, a, b)
            w = feasibility(p)
            if w is None and not include_infeasible:
                continue
            rows.append(TableRow(a, b, w, route_of(p) if w else "infeasible"))
    return rows
