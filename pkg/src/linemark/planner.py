"""Choose and run a construction for arbitrary feasible parameters.

The planner replays the induction on n: a = 0 and the [a, n-t] cases are
built directly, everything else is peeled down with the lift combinator
(``[a,b]_k^n`` from ``[a-1,b-1]_k^(n-k)``).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import constructions as C
from .combinators import lift, scale
from .errors import Infeasible, PreconditionError, UnsupportedOpenCase
from .feasibility import Params, feasibility
from .grid import DEFAULT_CELL_CAP, Marking, is_prime
from .verify import verify

ROUTES = {
    "unit": "unit-scale",
    "scale": "unit-scale",
    "0b": "0b",
    "a0": "0b",
    "ant": "a,n-t",
    "appendix": "appendix",
    "lift": "lift-recursion",
}


@dataclass(frozen=True)
class Plan:
    """One step of a construction tree.

    ``step`` is one of ``unit``, ``scale``, ``0b``, ``a0``, ``ant``,
    ``appendix`` or ``lift``; ``child`` is set for ``scale`` and ``lift``.
    """

    step: str
    params: Params
    child: Plan | None = None
    factor: int = 1

    def describe(self, indent: int = 0) -> str:
        line = " " * indent + f"{self.step} {self.params}"
        if self.step == "scale":
            line += f" x{self.factor}"
        if self.child is None:
            return line
        return line + "\n" + self.child.describe(indent + 2)


def plan(p: Params) -> Plan:
    if feasibility(p) is None:
        raise Infeasible(f"{p}: no nonnegative integer (s, t)")
    k, n, a, b = p.k, p.n, p.a, p.b
    if a == b:
        return Plan("scale", p, Plan("unit", Params(k, k, 1, 1)), factor=a)
    if a == 0:
        return Plan("0b" if is_prime(k) else "a0", p)
    if b > n - k:
        if is_prime(k):
            return Plan("ant", p)
        try:
            C.derive_appendix_params(k, n, a, n - b)
        except PreconditionError as exc:
            raise UnsupportedOpenCase(
                f"{p}: [a, n-t] with composite k and a >= 1 has no known construction ({exc})"
            ) from None
        return Plan("appendix", p)
    sub = Params(k, n - k, a - 1, b - 1)
    if feasibility(sub) is None:
        # never happens for prime k
        raise UnsupportedOpenCase(f"{p}: reduced instance {sub} fails the counting condition")
    return Plan("lift", p, plan(sub))


def route_of(p: Params) -> str:
    try:
        return ROUTES[plan(p).step]
    except Infeasible:
        return "infeasible"
    except UnsupportedOpenCase:
        return "unsupported-open-case"


def execute(pl: Plan, check: bool = False, parity_group: str = "product",
            cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    p = pl.params
    if pl.step == "unit":
        return C.unit_marking(p.k)
    if pl.step == "scale":
        return scale(execute(pl.child, check, parity_group, cap), pl.factor, cap=cap)
    if pl.step == "lift":
        return lift(execute(pl.child, check, parity_group, cap), cap=cap)
    if pl.step == "0b":
        return C.construct_0b_prime(p.k, p.n, p.b, check, cap)
    if pl.step == "a0":
        return C.construct_a0(p.k, p.n, p.b, check, cap)
    if pl.step == "ant":
        return C.construct_ant(p.k, p.n, p.a, p.n - p.b, check, cap)
    if pl.step == "appendix":
        return C.construct_appendix(p.k, p.n, p.a, p.n - p.b, parity_group=parity_group, cap=cap)
    raise ValueError(f"unknown plan step {pl.step!r}")


def construct(p: Params, check: bool = False, parity_group: str = "product",
              cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """Build a marking for ``p`` and certify it before returning.

    Raises Infeasible, UnsupportedOpenCase or ExperimentalFailure.
    """
    m = execute(plan(p), check, parity_group, cap).with_claim(p.a, p.b)
    report = verify(m, p, cap)
    if not report.ok:
        raise AssertionError(f"construction for {p} failed verification: {report.render()}")
    return m

