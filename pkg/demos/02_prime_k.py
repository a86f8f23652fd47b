"""
Building markings for prime k
=============================

For prime k every feasible pair is constructible.  The planner picks one of
the base constructions or peels the instance down with lift.
"""

import numpy as np

from linemark import Params, construct, plan, verify

for p in [Params(3, 5, 1, 4), Params(3, 8, 2, 3), Params(2, 8, 0, 4), Params(5, 4, 0, 2)]:
    print(plan(p).describe())
    m = construct(p)
    r = verify(m)
    print("   ok =", r.ok, " histogram =", r.histogram)

# the marking itself is one digit per line: marks[d, rank]
m = construct(Params(2, 3, 1, 3))
print(np.asarray(m.marks))
