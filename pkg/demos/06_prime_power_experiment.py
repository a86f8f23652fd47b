"""
An experiment with k = 4
========================

For prime powers the [a, n-t] case has only a sketched construction, with
characteristic values in a finite field.  The output is always verified.  On
failure up to 1000 seeded random tables q' are tried before giving up.

The colors can be added in Z_4 ("cyclic") or in Z_2 x Z_2 ("product").  Only
the second one works here.
"""

from linemark import ExperimentalFailure, construct_appendix, verify

for group in ("product", "cyclic"):
    try:
        m = construct_appendix(4, 6, 1, 1, parity_group=group)
    except ExperimentalFailure as exc:
        print(f"{group:8s} failed after {exc.attempts} tables")
        print("         first attempt:", exc.report.histogram)
    else:
        r = verify(m)
        print(f"{group:8s} verified: count_a={r.count_a} count_b={r.count_b}")
