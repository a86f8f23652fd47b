"""Direct constructors for the base cases.

Every constructor builds its marking one direction at a time.  For a line
with base point ``B`` the points are ``B + v*e_d``, whose parity is
``parity(B) + v``, so "mark the point of parity c" is the digit
``c - parity(B)``.  All quantities below are computed on whole arrays of base
points at once.

Coordinates are laid out in groups, x first, then y, then z.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import FieldSpec, circledast_table, default_qprime, index_digits
from .errors import ExperimentalFailure, PreconditionError
from .feasibility import Params, feasibility
from .grid import (
    DEFAULT_CELL_CAP,
    GroupSpec,
    Marking,
    axis_values,
    base_slice,
    check_cells,
    color_dtype,
    factorize,
    is_prime,
    parity_grid,
    prime_power,
)
from .verify import verify

APPENDIX_RETRIES = 1000


def _valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _m_unique(mask: np.ndarray) -> None:
    for d in range(mask.ndim):
        if int(mask.sum(axis=d, dtype=np.int64).max()) > 1:
            raise AssertionError(f"a line of direction {d} meets the pivot set twice")


def unit_marking(k: int) -> Marking:
    """[1,1]_k^k: the line of direction d marks the point with coordinate sum = d mod k."""
    if k < 2:
        raise PreconditionError("k must be at least 2")
    g = GroupSpec.cyclic_group(k)
    par = parity_grid(k, k, g)
    grids = [(d - base_slice(par, d).astype(np.int64)) % k for d in range(k)]
    return Marking.from_direction_grids(k, k, grids, 1, 1)


# -- [a, n-t] for prime k ----------------------------------------------------


@dataclass(frozen=True)
class AntParams:
    """Bookkeeping for the [a, n-t] construction.

    ``n - t - a = k**m * r`` with r coprime to k, and ``(k-1)*a - t = r*aprime``.
    ``targets`` are the chosen characteristic values; ``shift[i0][j]`` is the
    block L_s containing pair ``(i0, j)``.
    """

    k: int
    n: int
    a: int
    t: int
    m: int
    r: int
    aprime: int
    targets: tuple[int, ...]
    shift: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return self.k**self.m * self.r


def _partition(aprime: int, r: int, k: int, a: int, t: int) -> tuple[tuple[int, ...], ...]:
    """Fill [aprime] x [r] in lexicographic order: t blocks of a-1, then k-1-t blocks of a."""
    sizes = [a - 1] * t + [a] * (k - 1 - t)
    if sum(sizes) != aprime * r:
        raise PreconditionError("block sizes do not cover [a'] x [r]")
    labels = [s for s, size in enumerate(sizes, start=1) for _ in range(size)]
    return tuple(tuple(labels[i0 * r : (i0 + 1) * r]) for i0 in range(aprime))


def derive_ant_params(k: int, n: int, a: int, t: int) -> AntParams:
    if not is_prime(k):
        raise PreconditionError(f"k={k} is not prime")
    if not 0 <= t <= k - 1:
        raise PreconditionError(f"t={t} must lie in 0..{k - 1}")
    if not 1 <= a < n - t:
        raise PreconditionError(f"need 1 <= a < n-t, got a={a}, n-t={n - t}")
    if n < k * a:
        raise PreconditionError(f"n={n} < k*a={k * a}")
    width = n - t - a
    if ((n - k * a) * k ** (n - 1)) % width:
        raise PreconditionError("(n-ka)/(n-t-a) * k^(n-1) is not an integer")
    m = _valuation(width, k)
    r = width // k**m
    if (n - k * a) % r:
        raise PreconditionError(f"r={r} does not divide n-ka={n - k * a}")
    aprime, rem = divmod((k - 1) * a - t, r)
    if rem or aprime > k**m:
        raise PreconditionError(f"a'={((k - 1) * a - t) / r} is not an integer <= k^m")
    return AntParams(
        k, n, a, t, m, r, aprime,
        targets=tuple(range(aprime)),
        shift=_partition(aprime, r, k, a, t),
    )


def _linear_index_grid(k: int, n: int, m: int, r: int) -> list[np.ndarray]:
    """Digit grids of ``sum_(i,j) x_(i,j) * i`` over Z_k^m (most significant first)."""
    out = []
    for pos in range(m):
        acc = np.zeros([1] * n, dtype=np.int64)
        for i in range(k**m):
            w = index_digits(i, k, m)[pos]
            if w:
                for j in range(r):
                    acc = acc + w * axis_values(k, n, i * r + j)
        out.append(acc % k)
    return out


def construct_ant(k: int, n: int, a: int, t: int, check: bool = False,
                  cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """A marking of [k]^n, k prime, where every point is marked a or n-t times."""
    ap = derive_ant_params(k, n, a, t)
    m, r, K = ap.m, ap.r, ap.width
    par = parity_grid(k, n, GroupSpec.cyclic_group(k), cap).astype(np.int64)
    qd = _linear_index_grid(k, n, m, r)
    shift = np.array(ap.shift, dtype=np.int64).reshape(ap.aprime, r)
    weights = [k ** (m - 1 - pos) for pos in range(m)]

    if check:
        q_int = sum((w * q for w, q in zip(weights, qd)), np.zeros([1] * n, dtype=np.int64))
        _m_unique(np.broadcast_to((par == 0) & (q_int < ap.aprime), (k,) * n))

    grids = []
    for d in range(n):
        bp = base_slice(par, d)
        if d < K:
            i, j = divmod(d, r)
            idig = index_digits(i, k, m)
            v0 = (-bp) % k
            q_hit = np.zeros_like(v0)
            for pos in range(m):
                q_hit = q_hit + ((base_slice(qd[pos], d) + v0 * idig[pos]) % k) * weights[pos]
            in_m = q_hit < ap.aprime
            s = shift[np.minimum(q_hit, max(ap.aprime - 1, 0)), j] if ap.aprime else 0
            grids.append(np.where(in_m, (v0 + s) % k, v0))
        elif d < K + t:
            target = d - K + 1
            grids.append((target - bp) % k)
        else:
            grids.append((-bp) % k)
    return Marking.from_direction_grids(k, n, grids, a, n - t)


# -- [0, b] -----------------------------------------------------------------


def _zero_b_base(k: int, n: int, b: int, kspec: GroupSpec, check: bool, cap) -> Marking:
    """[0,b]_k^n for b <= n <= k*b when every prime of b divides k.

    The b x-coordinates are indexed by the group of order b; lines through a
    pivot point mark it, every other x-line and every z-line marks parity s*,
    and y-line group i marks parity tau(i).
    """
    bspec = GroupSpec.of_order(b)
    tab = circledast_table(kspec, bspec)
    t = min(k - 1, n // b)
    h = n - t * b
    s_star = kspec.ones
    tau = [e for e in range(k) if e not in (0, s_star)][: t - 1]
    par = parity_grid(k, n, kspec, cap)
    q = np.zeros([1] * n, dtype=np.int64)
    for i in range(b):
        q = bspec.add_arrays(q, tab[axis_values(k, n, i), i]).astype(np.int64)

    if check:
        _m_unique(np.broadcast_to((par == 0) & (q < h), (k,) * n))

    grids = []
    for d in range(n):
        bp = base_slice(par, d)
        if d < b:
            v0 = kspec.neg_table[bp]
            q_hit = bspec.add_arrays(base_slice(q, d), tab[v0, d])
            grids.append(np.where(q_hit < h, v0, kspec.sub_arrays(s_star, bp)))
        elif d < t * b:
            i = (d - b) // b
            grids.append(kspec.sub_arrays(tau[i], bp))
        else:
            grids.append(kspec.sub_arrays(s_star, bp))
    return Marking.from_direction_grids(k, n, grids, 0, b)


def _check_zero_b(k: int, n: int, b: int) -> None:
    if not 1 <= b <= n <= k * b:
        raise PreconditionError(f"need 1 <= b <= n <= k*b, got b={b} n={n} k={k}")
    if ((k * b - n) * k ** (n - 1)) % b:
        raise PreconditionError("(kb-n)/b * k^(n-1) is not an integer")


def construct_0b_prime(k: int, n: int, b: int, check: bool = False,
                       cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """[0,b]_k^n for prime k, reducing by r = gcd(b, n) to b = k^m."""
    from .combinators import scale

    if not is_prime(k):
        raise PreconditionError(f"k={k} is not prime")
    _check_zero_b(k, n, b)
    r = math.gcd(b, n)
    core = b // r
    if k ** _valuation(core, k) != core:
        raise PreconditionError(f"b/gcd(b,n)={core} is not a power of {k}")
    if r > 1:
        return scale(construct_0b_prime(k, n // r, core, check, cap), r, cap=cap)
    return _zero_b_base(k, n, b, GroupSpec.of_order(k), check, cap)


def construct_a0(k: int, n: int, b: int, check: bool = False,
                 cap: int | None = DEFAULT_CELL_CAP) -> Marking:
    """[0,b]_k^n for any k.

    ``b = d*r`` with r coprime to k and every prime of d dividing k; the r
    part is handled by scaling a [0,d] marking of [k]^(n/r).
    """
    from .combinators import scale

    _check_zero_b(k, n, b)
    d = 1
    for p, _ in factorize(k):
        d *= p ** _valuation(b, p)
    r = b // d
    if r > 1:
        if n % r:
            raise PreconditionError(f"coprime part r={r} of b does not divide n={n}")
        return scale(construct_a0(k, n // r, d, check, cap), r, cap=cap)
    return _zero_b_base(k, n, b, GroupSpec.of_order(k), check, cap)


# -- [a, n-t] for prime-power k (experimental) -------------------------------


@dataclass(frozen=True)
class AppendixParams:
    k: int
    n: int
    a: int
    t: int
    p: int
    m: int
    s: int
    r: int
    u: int
    aprime: int
    shift: tuple[tuple[int, ...], ...]


def derive_appendix_params(k: int, n: int, a: int, t: int) -> AppendixParams:
    """Solve ``n = t + a + r*p^s`` with ``s >= m`` and ``r | n - k*a``, taking s maximal."""
    pm = prime_power(k)
    if pm is None:
        raise PreconditionError(f"k={k} is not a prime power")
    p, m = pm
    if not 0 <= t <= k - 1:
        raise PreconditionError(f"t={t} must lie in 0..{k - 1}")
    if not 1 <= a < n - t:
        raise PreconditionError(f"need 1 <= a < n-t, got a={a}, n-t={n - t}")
    if n < k * a:
        raise PreconditionError(f"n={n} < k*a={k * a}")
    width = n - t - a
    s = _valuation(width, p)
    r = width // p**s
    if s < m:
        raise PreconditionError(f"n-t-a={width} has p-adic valuation {s} < m={m}")
    if p**s > 2**16:
        raise PreconditionError(f"field of order {p}^{s} is too large")
    if (n - k * a) % r:
        raise PreconditionError(f"r={r} does not divide n-ka={n - k * a}")
    u = (n - k * a) // r
    aprime, rem = divmod((k - 1) * a - t, r)
    if rem or aprime > p**s:
        raise PreconditionError("a' is not an integer <= p^s")
    return AppendixParams(k, n, a, t, p, m, s, r, u, aprime, _partition(aprime, r, k, a, t))


def _appendix_marking(ap: AppendixParams, g: GroupSpec, f: FieldSpec, qp: np.ndarray,
                      cap) -> Marking:
    k, n, r, t = ap.k, ap.n, ap.r, ap.t
    N = f.order
    K = N * r
    par = parity_grid(k, n, g, cap).astype(np.int64)
    rows = []
    q = np.zeros([1] * n, dtype=np.int64)
    scaled = [f.scale_all(i) for i in range(N)]
    for i in range(N):
        row = np.zeros([1] * n, dtype=np.int64)
        for j in range(r):
            row = g.add_arrays(row, axis_values(k, n, i * r + j)).astype(np.int64)
        rows.append(row)
        q = f.add_arrays(q, scaled[i][qp[row]])
    shift = np.array(ap.shift, dtype=np.int64).reshape(ap.aprime, r)

    grids = []
    for d in range(n):
        bp = base_slice(par, d)
        if d < K:
            i, j = divmod(d, r)
            v0 = g.neg_table[bp].astype(np.int64)
            row0 = base_slice(rows[i], d)
            row1 = g.add_arrays(row0, v0).astype(np.int64)
            delta = f.add_arrays(qp[row1], f.scale_all(f.neg(1))[qp[row0]])
            q_hit = f.add_arrays(base_slice(q, d), scaled[i][delta])
            in_m = q_hit < ap.aprime
            if ap.aprime:
                s = shift[np.minimum(q_hit, ap.aprime - 1), j]
                grids.append(np.where(in_m, g.add_arrays(v0, s), v0))
            else:
                grids.append(v0)
        elif d < K + t:
            grids.append(g.sub_arrays(d - K + 1, bp))
        else:
            grids.append(g.sub_arrays(0, bp))
    return Marking.from_direction_grids(k, n, grids, ap.a, n - t)


def construct_appendix(
    k: int,
    n: int,
    a: int,
    t: int,
    qprime=None,
    parity_group: str = "product",
    retries: int = APPENDIX_RETRIES,
    seed: int = 0,
    cap: int | None = DEFAULT_CELL_CAP,
) -> Marking:
    """Experimental [a, n-t]_k^n for k = p^m using characteristic values in F_{p^s}.

    Every candidate is verified before it is returned.  When the default q'
    fails, up to ``retries`` random q' tables drawn from a generator seeded
    with ``seed`` are tried; an explicit ``qprime`` is tried alone.

    ``parity_group`` selects the color group: ``"product"`` (Z_p^m, the
    default) or ``"cyclic"`` (Z_{p^m}).
    """
    ap = derive_appendix_params(k, n, a, t)
    check_cells(k, n, cap)
    if parity_group == "product":
        g = GroupSpec.of_order(k)
    elif parity_group == "cyclic":
        g = GroupSpec.cyclic_group(k)
    else:
        raise ValueError(f"unknown parity group {parity_group!r}")
    f = FieldSpec.of(ap.p, ap.s)
    params = Params(k, n, a, n - t)
    if feasibility(params) is None:
        raise PreconditionError(f"{params} fails the counting condition")

    explicit = qprime is not None
    table = np.asarray(qprime if explicit else default_qprime(k, f), dtype=np.int64)
    if table.shape != (k,) or table.min() < 0 or table.max() >= f.order:
        raise ValueError(f"q' must map the {k} colors into 0..{f.order - 1}")

    first_report = None
    rng = np.random.default_rng(seed)
    attempts = 0
    while True:
        attempts += 1
        marking = _appendix_marking(ap, g, f, table, cap)
        report = verify(marking, params, cap)
        if report.ok:
            return marking
        if first_report is None:
            first_report = report
        if explicit or attempts > retries:
            break
        table = rng.integers(0, f.order, size=k)
    raise ExperimentalFailure(
        f"{params}: no verified marking after {attempts} q' table(s); "
        f"default table gave count_a={first_report.count_a} count_b={first_report.count_b} "
        f"with {first_report.num_violations} violating points",
        attempts=attempts,
        report=first_report,
    )
