"""Points, coordinate lines and markings of the grid [k]^n.

Colors are the residues ``0..k-1``.  A point is a tuple of ``n`` colors and
its index is the little-endian base-``k`` number with coordinate 0 least
significant.  A coordinate line is identified by its free direction and its
base point, the point of the line whose free coordinate is 0.

Bulk work is done on dense numpy arrays of shape ``(k,) * n`` in which axis
``i`` is coordinate ``i``; flattening such an array in Fortran order yields
point-index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

DEFAULT_CELL_CAP = 10**8

Point = tuple[int, ...]


class CellCapExceeded(ValueError):
    """Raised when ``n * k**n`` point-direction cells exceed the configured cap."""


def check_cells(k: int, n: int, cap: int | None = DEFAULT_CELL_CAP) -> None:
    if cap is not None and n * k**n > cap:
        raise CellCapExceeded(
            f"[{k}]^{n} has {n * k**n} point-direction cells, cap is {cap}"
        )


def factorize(k: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``k`` as ``((p, e), ...)`` with increasing primes."""
    if k < 1:
        raise ValueError(f"cannot factor {k}")
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append((p, e))
        p += 1
    if k > 1:
        out.append((k, 1))
    return tuple(out)


def is_prime(k: int) -> bool:
    return k >= 2 and factorize(k) == ((k, 1),)


def prime_power(k: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``k == p**m``, or None if ``k`` is not a prime power."""
    f = factorize(k)
    return f[0] if len(f) == 1 else None


def color_dtype(k: int) -> np.dtype:
    return np.dtype(np.uint8) if k <= 256 else np.dtype(np.uint16)


@dataclass(frozen=True)
class GroupSpec:
    """An abelian group structure on ``0..k-1``.

    By default the group is ``Z_p1^a1 x ... x Z_pl^al`` for ``k = p1^a1 ... pl^al``.
    Elements are encoded by a mixed-radix number whose digits are read most
    significant first: the block of the smallest prime comes first, and within
    a block the digits run from most to least significant.  With
    ``cyclic=True`` the group is plain ``Z_k`` with a single digit.

    ``k == 1`` is allowed and gives the trivial group (no digits).
    """

    k: int
    factors: tuple[tuple[int, int], ...]
    cyclic: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("group order must be positive")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"bad factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.k:
            raise ValueError(f"factors {self.factors} do not multiply to {self.k}")

    @classmethod
    def of_order(cls, k: int) -> GroupSpec:
        return cls(k, factorize(k))

    @classmethod
    def cyclic_group(cls, k: int) -> GroupSpec:
        return cls(k, factorize(k), cyclic=True)

    @cached_property
    def moduli(self) -> tuple[int, ...]:
        """Modulus of each digit, most significant digit first."""
        if self.cyclic:
            return (self.k,) if self.k > 1 else ()
        return tuple(p for p, e in self.factors for _ in range(e))

    @property
    def digit_count(self) -> int:
        return len(self.moduli)

    @cached_property
    def is_cyclic(self) -> bool:
        return self.cyclic or len(self.moduli) <= 1

    def decode(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.k:
            raise ValueError(f"{e} is not an element of a group of order {self.k}")
        digits = []
        for mod in reversed(self.moduli):
            e, d = divmod(e, mod)
            digits.append(d)
        return tuple(reversed(digits))

    def encode(self, digits: Sequence[int]) -> int:
        if len(digits) != len(self.moduli):
            raise ValueError(f"expected {len(self.moduli)} digits, got {len(digits)}")
        e = 0
        for d, mod in zip(digits, self.moduli):
            if not 0 <= d < mod:
                raise ValueError(f"digit {d} out of range for modulus {mod}")
            e = e * mod + d
        return e

    def add(self, x: int, y: int) -> int:
        return int(self.add_table[x, y])

    def neg(self, x: int) -> int:
        return int(self.neg_table[x])

    def sub(self, x: int, y: int) -> int:
        return int(self.add_table[x, self.neg_table[y]])

    def total(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    @cached_property
    def ones(self) -> int:
        """The element whose digits are all 1 (the distinguished shift)."""
        return self.encode([1] * self.digit_count)

    @cached_property
    def _digit_matrix(self) -> np.ndarray:
        return np.array([self.decode(e) for e in range(self.k)], dtype=np.int64).reshape(
            self.k, self.digit_count
        )

    @cached_property
    def _weights(self) -> np.ndarray:
        w = []
        acc = 1
        for mod in reversed(self.moduli):
            w.append(acc)
            acc *= mod
        return np.array(list(reversed(w)), dtype=np.int64)

    @cached_property
    def add_table(self) -> np.ndarray:
        if self.is_cyclic:
            r = np.arange(self.k)
            table = (r[:, None] + r[None, :]) % self.k
        else:
            dm = self._digit_matrix
            mods = np.array(self.moduli, dtype=np.int64)
            summed = (dm[:, None, :] + dm[None, :, :]) % mods
            table = summed @ self._weights
        table = table.astype(color_dtype(self.k))
        table.flags.writeable = False
        return table

    @cached_property
    def neg_table(self) -> np.ndarray:
        table = np.argmin(self.add_table, axis=1).astype(color_dtype(self.k))
        table.flags.writeable = False
        return table

    def add_arrays(self, x, y):
        """Elementwise group addition of broadcastable integer arrays."""
        if self.is_cyclic:
            return ((np.asarray(x, dtype=np.int64) + y) % self.k).astype(color_dtype(self.k))
        return self.add_table[x, y]

    def sub_arrays(self, x, y):
        if self.is_cyclic:
            return ((np.asarray(x, dtype=np.int64) - y) % self.k).astype(color_dtype(self.k))
        return self.add_table[x, self.neg_table[y]]


def point_index(coords: Sequence[int], k: int) -> int:
    idx = 0
    for c in reversed(coords):
        if not 0 <= c < k:
            raise ValueError(f"coordinate {c} outside 0..{k - 1}")
        idx = idx * k + c
    return idx


def point_coords(index: int, k: int, n: int) -> Point:
    if not 0 <= index < k**n:
        raise ValueError(f"point index {index} outside 0..{k**n - 1}")
    out = []
    for _ in range(n):
        index, c = divmod(index, k)
        out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class LineId:
    """A coordinate line: free direction plus base point (free coordinate zeroed)."""

    dir: int
    base: Point

    def __post_init__(self):
        if not 0 <= self.dir < len(self.base):
            raise ValueError(f"direction {self.dir} out of range for n={len(self.base)}")
        if self.base[self.dir] != 0:
            raise ValueError("base point must have its free coordinate equal to 0")

    def rank(self, k: int) -> int:
        """Position of this line among the lines of its direction."""
        rest = self.base[: self.dir] + self.base[self.dir + 1 :]
        return point_index(rest, k)


def line_from_rank(d: int, rank: int, k: int, n: int) -> LineId:
    rest = point_coords(rank, k, n - 1)
    return LineId(d, rest[:d] + (0,) + rest[d:])


def point_line(p: Sequence[int], d: int) -> LineId:
    if not 0 <= d < len(p):
        raise ValueError(f"direction {d} out of range for n={len(p)}")
    base = tuple(p)
    return LineId(d, base[:d] + (0,) + base[d + 1 :])


def line_points(line: LineId, k: int) -> list[Point]:
    d, base = line.dir, line.base
    return [base[:d] + (v,) + base[d + 1 :] for v in range(k)]


def parity(p: Sequence[int], g: GroupSpec) -> int:
    """Group sum of the coordinates of ``p``."""
    for c in p:
        if not 0 <= c < g.k:
            raise ValueError(f"coordinate {c} is not a color of a group of order {g.k}")
    return g.total(p)


def solve_parity(line: LineId, target: int, g: GroupSpec) -> Point:
    """The unique point of ``line`` whose parity equals ``target``."""
    v = g.sub(target, parity(line.base, g))
    d = line.dir
    return line.base[:d] + (v,) + line.base[d + 1 :]


@dataclass(frozen=True, eq=False)
class Marking:
    """One marked point per coordinate line of [k]^n.

    ``marks[d, rank]`` is the free-coordinate value of the point marked on the
    line of direction ``d`` with the given rank.  ``a``/``b`` record the
    claimed parameters and are carried into files; they are not trusted.
    """

    k: int
    n: int
    marks: np.ndarray
    a: int | None = None
    b: int | None = None

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise ValueError(f"need k >= 2 and n >= 1, got k={self.k} n={self.n}")
        marks = np.array(self.marks, dtype=color_dtype(self.k), copy=True)
        if marks.shape != (self.n, self.k ** (self.n - 1)):
            raise ValueError(
                f"marks must have shape {(self.n, self.k ** (self.n - 1))}, got {marks.shape}"
            )
        if marks.size and int(marks.max()) >= self.k:
            raise ValueError(f"mark value {int(marks.max())} is not a color of k={self.k}")
        marks.flags.writeable = False
        object.__setattr__(self, "marks", marks)

    def __eq__(self, other):
        if not isinstance(other, Marking):
            return NotImplemented
        return (
            (self.k, self.n, self.a, self.b) == (other.k, other.n, other.a, other.b)
            and np.array_equal(self.marks, other.marks)
        )

    __hash__ = None

    def __repr__(self):
        return f"Marking(k={self.k}, n={self.n}, a={self.a}, b={self.b})"

    @property
    def num_lines(self) -> int:
        return self.n * self.k ** (self.n - 1)

    def with_claim(self, a: int | None, b: int | None) -> Marking:
        return Marking(self.k, self.n, self.marks, a, b)

    def digit(self, line: LineId) -> int:
        if len(line.base) != self.n:
            raise ValueError("line does not belong to this grid")
        return int(self.marks[line.dir, line.rank(self.k)])

    def direction_grid(self, d: int) -> np.ndarray:
        """Marks of direction ``d`` as an array of shape ``(k,)*n`` with axis ``d`` of length 1."""
        shape = (self.k,) * (self.n - 1)
        grid = self.marks[d].reshape(shape, order="F")
        return np.expand_dims(grid, d)

    @classmethod
    def from_direction_grids(cls, k: int, n: int, grids: Sequence[np.ndarray], a=None, b=None):
        """Inverse of :meth:`direction_grid`; each grid may be any broadcastable shape."""
        rows = np.empty((n, k ** (n - 1)), dtype=color_dtype(k))
        for d, g in enumerate(grids):
            shape = [k] * n
            shape[d] = 1
            full = np.broadcast_to(g, shape)
            rows[d] = np.squeeze(full, axis=d).reshape(-1, order="F")
        return cls(k, n, rows, a, b)

    def marked_indices(self) -> np.ndarray:
        """Point index of the marked point of every line, direction-major."""
        k, n = self.k, self.n
        ranks = np.arange(k ** (n - 1), dtype=np.int64)
        out = np.empty((n, ranks.size), dtype=np.int64)
        for d in range(n):
            low = k**d
            base = ranks % low + (ranks // low) * (low * k)
            out[d] = base + self.marks[d].astype(np.int64) * low
        return out


def marked_point(m: Marking, line: LineId) -> Point:
    d = line.dir
    return line.base[:d] + (m.digit(line),) + line.base[d + 1 :]


def axis_values(k: int, n: int, i: int, dtype=np.int64) -> np.ndarray:
    """``arange(k)`` shaped to broadcast along axis ``i`` of an n-dimensional grid."""
    shape = [1] * n
    shape[i] = k
    return np.arange(k, dtype=dtype).reshape(shape)


def group_sum_grid(k: int, n: int, axes: Iterable[int], g: GroupSpec) -> np.ndarray:
    """Group sum of the given coordinates, broadcastable over (k,)*n."""
    acc = np.zeros([1] * n, dtype=color_dtype(k))
    for i in axes:
        acc = g.add_arrays(acc, axis_values(k, n, i, dtype=color_dtype(k)))
    return acc


def parity_grid(k: int, n: int, g: GroupSpec, cap: int | None = DEFAULT_CELL_CAP) -> np.ndarray:
    """Parity of every point as a dense ``(k,)*n`` array."""
    check_cells(k, n, cap)
    return np.broadcast_to(group_sum_grid(k, n, range(n), g), (k,) * n)


def base_slice(arr: np.ndarray, d: int) -> np.ndarray:
    """Restriction of a grid quantity to base points of direction ``d``."""
    if arr.shape[d] == 1:
        return arr
    idx = [slice(None)] * arr.ndim
    idx[d] = slice(0, 1)
    return arr[tuple(idx)]
