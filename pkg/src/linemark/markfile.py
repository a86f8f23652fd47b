"""The LINEMARK text format for markings.

::

    LINEMARK 1
    k=<int> n=<int> a=<int> b=<int>
    <k^(n-1) space-separated marks for direction 0>
    ...
    <k^(n-1) space-separated marks for direction n-1>

Marks within a row are ordered by ascending base-point index.  Newlines are
LF and the file ends with one.
"""

from __future__ import annotations

import re

import numpy as np

from .grid import Marking, color_dtype

MAGIC = "LINEMARK 1"
_HEADER = re.compile(r"k=(\d+) n=(\d+) a=(\d+) b=(\d+)")


class MarkingFileError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _render_row(row: np.ndarray, k: int) -> bytes:
    if k <= 10:
        out = np.full(2 * row.size - 1, ord(" "), dtype=np.uint8)
        out[::2] = row.astype(np.uint8) + ord("0")
        return out.tobytes()
    return " ".join(map(str, row.tolist())).encode("ascii")


def render_marking(m: Marking) -> bytes:
    if m.a is None or m.b is None:
        raise ValueError("a marking file needs the claimed (a, b)")
    parts = [MAGIC.encode(), f"k={m.k} n={m.n} a={m.a} b={m.b}".encode()]
    parts += [_render_row(m.marks[d], m.k) for d in range(m.n)]
    return b"\n".join(parts) + b"\n"


def _bad_token_column(text: str, k: int) -> tuple[int, str]:
    col = 1
    for tok in text.split(" "):
        if not tok:
            return col, "empty field (stray space)"
        if not tok.isdigit() or not tok.isascii():
            return col, f"{tok!r} is not a nonnegative integer"
        if int(tok) >= k:
            return col, f"mark {tok} is not a color of k={k}"
        col += len(tok) + 1
    return col, "malformed row"


def _parse_row(text: str, lineno: int, k: int, width: int) -> np.ndarray:
    if k <= 10 and len(text) == 2 * width - 1:
        raw = np.frombuffer(text.encode("latin-1"), dtype=np.uint8)
        digits = raw[::2].astype(np.int64) - ord("0")
        if (raw[1::2] == ord(" ")).all() and ((digits >= 0) & (digits < k)).all():
            return digits.astype(color_dtype(k))
    tokens = text.split(" ")
    if all(t.isdigit() and t.isascii() for t in tokens):
        vals = np.array(tokens, dtype=np.int64) if tokens else np.zeros(0, np.int64)
        if len(vals) != width:
            raise MarkingFileError(lineno, len(text) + 1, f"expected {width} marks, found {len(vals)}")
        if vals.size and vals.max() < k:
            return vals.astype(color_dtype(k))
    col, msg = _bad_token_column(text, k)
    raise MarkingFileError(lineno, col, msg)


def parse_marking(data: bytes | str) -> Marking:
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MarkingFileError(data[: exc.start].count(b"\n") + 1, 1, "non-ASCII byte") from None
    if not data.endswith("\n"):
        raise MarkingFileError(data.count("\n") + 1, 1, "missing final newline")
    lines = data[:-1].split("\n")
    for i, line in enumerate(lines, start=1):
        if "\r" in line:
            raise MarkingFileError(i, line.index("\r") + 1, "CR character (LF newlines only)")
    if lines[0] != MAGIC:
        raise MarkingFileError(1, 1, f"expected {MAGIC!r}")
    if len(lines) < 2:
        raise MarkingFileError(2, 1, "missing parameter line")
    mt = _HEADER.fullmatch(lines[1])
    if not mt:
        raise MarkingFileError(2, 1, "expected 'k=<int> n=<int> a=<int> b=<int>'")
    k, n, a, b = map(int, mt.groups())
    if k < 2 or n < 1:
        raise MarkingFileError(2, 1, f"need k >= 2 and n >= 1, got k={k} n={n}")
    if len(lines) != n + 2:
        raise MarkingFileError(min(len(lines), n + 2) + 1, 1,
                               f"expected {n} mark rows, found {len(lines) - 2}")
    width = k ** (n - 1)
    rows = np.empty((n, width), dtype=color_dtype(k))
    for d in range(n):
        rows[d] = _parse_row(lines[d + 2], d + 3, k, width)
    return Marking(k, n, rows, a, b)


def write_marking(path, m: Marking) -> None:
    with open(path, "wb") as fh:
        fh.write(render_marking(m))


def read_marking(path) -> Marking:
    with open(path, "rb") as fh:
        return parse_marking(fh.read())
