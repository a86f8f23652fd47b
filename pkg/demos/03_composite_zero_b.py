"""
Composite k with a = 0
======================

Here every point is either unmarked or marked exactly b times.  Parities are
taken in the product of cyclic groups of prime-power order, which is what
makes the construction work when k is not prime.
"""

import time

from linemark import Params, construct, verify

for k, n, b in [(6, 8, 6), (4, 6, 4), (6, 6, 6), (10, 4, 2), (12, 4, 3)]:
    t0 = time.perf_counter()
    m = construct(Params(k, n, 0, b))
    r = verify(m)
    print(f"[0,{b}]_{k}^{n}: ok={r.ok} unmarked={r.count_a} marked={r.count_b}"
          f"  ({time.perf_counter() - t0:.2f}s)")
