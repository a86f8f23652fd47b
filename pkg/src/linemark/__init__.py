"""Markings of the coordinate lines of [k]^n in which every point is marked a or b times.

Typical use::

    from linemark import Params, construct, verify

    m = construct(Params(k=3, n=5, a=1, b=4))
    verify(m).ok   # True
"""

from .algebra import FieldSpec, circledast, find_irreducible, q_field, q_general, q_prime
from .combinators import lift, scale
from .constructions import (
    construct_0b_prime,
    construct_a0,
    construct_ant,
    construct_appendix,
    derive_ant_params,
    unit_marking,
)
from .errors import (
    ConstructionError,
    ExperimentalFailure,
    Infeasible,
    PreconditionError,
    UnsupportedOpenCase,
)
from .feasibility import FeasibilityWitness, Params, feasibility, feasible_table
from .grid import (
    CellCapExceeded,
    GroupSpec,
    LineId,
    Marking,
    line_points,
    marked_point,
    parity,
    point_coords,
    point_index,
    point_line,
    solve_parity,
)
from .markfile import MarkingFileError, parse_marking, read_marking, render_marking, write_marking
from .oracle import SearchLimits, SearchResult, search
from .planner import Plan, construct, plan
from .verify import VerifyReport, hat_guess, hat_play, hat_play_many, mark_counts, verify

__version__ = "0.1.0"
