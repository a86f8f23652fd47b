import itertools
from collections import Counter

from linemark.grid import LineId


def naive_counts(m):
    """Per-point mark counts by walking every line with plain tuples."""
    k, n = m.k, m.n
    counts = Counter()
    for d in range(n):
        for rest in itertools.product(range(k), repeat=n - 1):
            base = rest[:d] + (0,) + rest[d:]
            v = m.digit(LineId(d, base))
            counts[base[:d] + (v,) + base[d + 1 :]] += 1
    return counts


def expected_st(k, n, a, b):
    """Closed-form split of the k^n points into a-marked and b-marked ones."""
    total, lines = k**n, n * k ** (n - 1)
    if a == b:
        return total, 0
    t, rem = divmod(lines - a * total, b - a)
    assert rem == 0
    return total - t, t


def naive_ok(m, a, b):
    k, n = m.k, m.n
    c = naive_counts(m)
    vals = [c[p] for p in itertools.product(range(k), repeat=n)]
    s, t = expected_st(k, n, a, b)
    if a == b:
        return all(v == a for v in vals)
    return all(v in (a, b) for v in vals) and vals.count(a) == s and vals.count(b) == t


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
