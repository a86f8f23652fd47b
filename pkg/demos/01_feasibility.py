"""
Which (a, b) can possibly work?
===============================

Every one of the n*k^(n-1) lines marks one point, so if s points get a marks
and t points get b marks we need s + t = k^n and a*s + b*t = n*k^(n-1).
That pins (s, t) down, and nonnegative integer solutions are the whole story.
"""

from linemark import Params, feasibility, feasible_table

print(feasibility(Params(3, 5, 1, 4)))  # 189 points marked once, 54 four times
print(feasibility(Params(3, 4, 1, 3)))  # None: t would be 27/2

# the table also shows which construction the planner would use
for row in feasible_table(3, 6, include_infeasible=True):
    if row.witness:
        print(f"[{row.a},{row.b}]_3^6  s={row.witness.s:4d} t={row.witness.t:4d}  {row.route}")
    else:
        print(f"[{row.a},{row.b}]_3^6  impossible")
