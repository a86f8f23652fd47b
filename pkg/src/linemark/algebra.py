"""Characteristic functions and small finite fields.

Index conventions used throughout:

* an index ``i`` in ``Z_k^m`` is an integer ``0..k^m-1`` whose base-k digits,
  most significant first, are the vector components;
* a flat block of ``k^m * r`` coordinates is ordered i-major, so coordinate
  ``(i, j)`` sits at position ``i*r + j``;
* field elements are integers whose base-p digits, least significant first,
  are the polynomial coefficients ``c_0, c_1, ...``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .grid import GroupSpec, is_prime

FIELD_LIMIT = 2**16


def index_digits(i: int, k: int, m: int) -> tuple[int, ...]:
    """Components of ``i`` in Z_k^m, most significant first."""
    out = []
    for _ in range(m):
        i, d = divmod(i, k)
        out.append(d)
    if i:
        raise ValueError(f"index out of range for Z_{k}^{m}")
    return tuple(reversed(out))


def index_from_digits(digits: Sequence[int], k: int) -> int:
    i = 0
    for d in digits:
        i = i * k + d
    return i


def _check_block(x: Sequence[int], k: int, width: int) -> None:
    if not is_prime(k):
        raise ValueError(f"k={k} is not prime")
    if len(x) != width:
        raise ValueError(f"expected {width} coordinates, got {len(x)}")


def q_prime(x: Sequence[int], m: int, r: int, k: int) -> tuple[int, ...]:
    """Sum over ``i`` of (row sum of block ``i``) times the vector ``i``, over Z_k."""
    _check_block(x, k, k**m * r)
    acc = [0] * m
    for i in range(k**m):
        row = sum(x[i * r : (i + 1) * r]) % k
        if row:
            for pos, d in enumerate(index_digits(i, k, m)):
                acc[pos] = (acc[pos] + row * d) % k
    return tuple(acc)


def shift_identity_prime(
    x: Sequence[int], s: int, i: int, j: int, m: int, r: int, k: int
) -> tuple[int, ...]:
    """Evaluate ``q_prime`` at ``x - s*e_(i,j)``.

    The result equals ``q_prime(x) - s*i``; this helper exists so that the
    identity can be checked against a direct evaluation.
    """
    _check_block(x, k, k**m * r)
    if not 1 <= s < k:
        raise ValueError(f"shift {s} must be in 1..{k - 1}")
    y = list(x)
    y[i * r + j] = (y[i * r + j] - s) % k
    return q_prime(y, m, r, k)


def _blocks(g: GroupSpec) -> dict[int, tuple[int, int]]:
    """prime -> (first digit position, digit count) of that prime's block."""
    if g.cyclic and len(g.factors) == 1 and g.factors[0][1] > 1:
        raise ValueError("the cyclic group Z_{p^m}, m > 1, has no digit blocks over Z_p")
    out = {}
    pos = 0
    for p, e in g.factors:
        out[p] = (pos, e)
        pos += e
    return out


def circledast(u: int, v: int, kspec: GroupSpec, bspec: GroupSpec) -> int:
    """Scale each prime block of ``v`` by the last digit of ``u``'s block for that prime."""
    kb, bb = _blocks(kspec), _blocks(bspec)
    ud, vd = kspec.decode(u), list(bspec.decode(v))
    for p, (start, width) in bb.items():
        if p not in kb:
            raise ValueError(f"prime {p} of the index group does not divide k={kspec.k}")
        ks, kw = kb[p]
        scalar = ud[ks + kw - 1]
        for pos in range(start, start + width):
            vd[pos] = (vd[pos] * scalar) % p
    return bspec.encode(vd)


def circledast_table(kspec: GroupSpec, bspec: GroupSpec) -> np.ndarray:
    """``table[u, v] == circledast(u, v)`` for all colors u and indices v."""
    return np.array(
        [[circledast(u, v, kspec, bspec) for v in range(bspec.k)] for u in range(kspec.k)],
        dtype=np.int64,
    ).reshape(kspec.k, bspec.k)


def q_general(x: Sequence[int], kspec: GroupSpec, bspec: GroupSpec) -> int:
    """``sum_i x_i (*) i`` over the index group; coordinate ``i`` of x is index element ``i``."""
    if len(x) != bspec.k:
        raise ValueError(f"expected {bspec.k} coordinates, got {len(x)}")
    acc = 0
    for i, xi in enumerate(x):
        acc = bspec.add(acc, circledast(xi, i, kspec, bspec))
    return acc


# -- polynomials over Z_p, coefficient lists low degree first ---------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for idx, bc in enumerate(b):
            a[shift + idx] = (a[shift + idx] - coef * bc) % p
        _poly_trim(a)
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(tail) + [1], p):
                return False
    return True


def find_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``s`` (coefficients low first)."""
    if not is_prime(p) or s < 1 or p**s > FIELD_LIMIT:
        raise ValueError(f"unsupported field size {p}^{s}")
    for tail in itertools.product(range(p), repeat=s):
        cand = tail + (1,)
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {s} over Z_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^s} = Z_p[X]/(modulus)."""

    p: int
    s: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p) or self.s < 1 or self.p**self.s > FIELD_LIMIT:
            raise ValueError(f"unsupported field size {self.p}^{self.s}")
        if len(self.modulus) != self.s + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree s")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"{self.modulus} is reducible over Z_{self.p}")

    @classmethod
    def of(cls, p: int, s: int) -> FieldSpec:
        return cls(p, s, find_irreducible(p, s))

    @property
    def order(self) -> int:
        return self.p**self.s

    def elements(self) -> range:
        return range(self.order)

    def coeffs(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.order:
            raise ValueError(f"{e} is not an element of F_{self.p}^{self.s}")
        out = []
        for _ in range(self.s):
            e, c = divmod(e, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, c: Sequence[int]) -> int:
        c = list(c) + [0] * (self.s - len(c))
        if len(c) != self.s:
            raise ValueError("too many coefficients")
        e = 0
        for coef in reversed(c):
            e = e * self.p + coef % self.p
        return e

    def add(self, x: int, y: int) -> int:
        return self.from_coeffs([(a + b) % self.p for a, b in zip(self.coeffs(x), self.coeffs(y))])

    def neg(self, x: int) -> int:
        return self.from_coeffs([(-a) % self.p for a in self.coeffs(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * self.s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.order - 2)

    def pow(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @cached_property
    def _coeff_matrix(self) -> np.ndarray:
        """Row e holds the coefficients of element e."""
        e = np.arange(self.order, dtype=np.int64)
        return np.stack([(e // self.p**i) % self.p for i in range(self.s)], axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.p ** np.arange(self.s, dtype=np.int64)

    def mul_matrix(self, c: int) -> np.ndarray:
        """Matrix of y -> c*y acting on coefficient row vectors (y_coeffs @ M)."""
        rows = [self.coeffs(self.mul(c, self.from_coeffs([0] * i + [1]))) for i in range(self.s)]
        return np.array(rows, dtype=np.int64).reshape(self.s, self.s)

    def scale_all(self, c: int) -> np.ndarray:
        """``c * e`` for every element e, as an array indexed by e."""
        return (self._coeff_matrix @ self.mul_matrix(c)) % self.p @ self._weights

    def add_arrays(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.int64)
        for w in self._weights:
            out += ((x // w + y // w) % self.p) * w
        return out


def default_qprime(k: int, f: FieldSpec) -> list[int]:
    """Base-p digits of a color read as the coefficient vector of a field element."""
    if f.order < k:
        raise ValueError(f"field of order {f.order} cannot hold {k} colors injectively")
    return list(range(k))


def q_field(
    x: Sequence[int],
    f: FieldSpec,
    r: int,
    k: int,
    qprime_map: Sequence[int],
    group: GroupSpec | None = None,
) -> int:
    """``sum_i q'(row sum of block i) * i`` over F_{p^s}.

    Row sums are taken in ``group`` (default: cyclic Z_k); ``qprime_map[v]``
    is the field element assigned to color ``v``.
    """
    g = group if group is not None else GroupSpec.cyclic_group(k)
    if g.k != k:
        raise ValueError("row-sum group does not match k")
    if len(x) != f.order * r:
        raise ValueError(f"expected {f.order * r} coordinates, got {len(x)}")
    if len(qprime_map) != k:
        raise ValueError(f"q' table needs {k} entries, got {len(qprime_map)}")
    acc = 0
    for i in f.elements():
        row = g.total(x[i * r : (i + 1) * r])
        acc = f.add(acc, f.mul(qprime_map[row], i))
    return acc
