"""
Growing markings
================

lift adds k coordinates and one mark to every point.  scale repeats the grid
r times and multiplies every count by r.  Both check their input first.
"""

from linemark import Params, construct, lift, scale, verify

base = construct(Params(3, 2, 0, 1))
print("base      ", verify(base).histogram)

up = lift(base)
print("lift      ", (up.k, up.n, up.a, up.b), verify(up).histogram)

big = scale(base, 3)
print("scale x3  ", (big.k, big.n, big.a, big.b), verify(big).histogram)

both = lift(scale(base, 2))
print("lift(x2)  ", (both.k, both.n, both.a, both.b), verify(both).ok)
