"""
Exhaustive search on tiny grids
===============================

The backtracking oracle knows nothing about the constructions.  On small grids
it settles existence directly, and it agrees with the counting condition.
"""

from linemark import Params, SearchLimits, feasibility, search

for k, n in [(2, 2), (2, 3), (3, 2)]:
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            p = Params(k, n, a, b)
            res = search(p)
            print(f"{p}: search={res.status:5s} counting={'yes' if feasibility(p) else 'no '}"
                  f" nodes={res.nodes}")

# larger instances blow through any budget; the answer is then "no claim"
print(search(Params(3, 3, 0, 2), SearchLimits(max_nodes=50_000)).status)
