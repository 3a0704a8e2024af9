"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; there is no floating point.
Rank uses fraction-free (Bareiss) elimination on integer-scaled rows, while
reduced echelon forms and null spaces use plain Gauss-Jordan over the
rationals. Pivot search is deterministic: the first nonzero entry scanning
row-major through the remaining submatrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Number = int | Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"refusing non-exact entry {x!r}")


class RationalMatrix:
    """Immutable dense matrix of normalized rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[Number]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("data does not match the declared shape")
            self._data = tuple(tuple(_frac(x) for x in r) for r in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int | None = None) -> "RationalMatrix":
        if not rows:
            return cls(0, cols or 0)
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, [list(c) for c in zip(*self._data)] if self.rows else [[] for _ in range(self.cols)])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return RationalMatrix(self.rows, other.cols, matmul(self.to_lists(), other.to_lists(), other.cols))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def scale(self, c: Number) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, [[c * x for x in r] for r in self._data])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def rank(self) -> int:
        return rank(self)

    def kernel_dim(self) -> int:
        return kernel_dim(self)


def matmul(a: list[list[Fraction]], b: list[list[Fraction]], b_cols: int) -> list[list[Fraction]]:
    out = []
    for r in a:
        acc = [Fraction(0)] * b_cols
        for k, x in enumerate(r):
            if x:
                bk = b[k]
                for j in range(b_cols):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def _as_rows(m) -> list[list[Fraction]]:
    if isinstance(m, RationalMatrix):
        return m.to_lists()
    return [[_frac(x) for x in r] for r in m]


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def rank(m) -> int:
    """Rank over Q by Bareiss fraction-free elimination."""
    rows = _integer_rows(_as_rows(m))
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            if f:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def kernel_dim(m) -> int:
    """Dimension of the right null space: ``cols - rank``."""
    rows = _as_rows(m)
    cols = m.cols if isinstance(m, RationalMatrix) else (len(rows[0]) if rows else 0)
    return cols - rank(rows)


def rref(rows: list[list[Fraction]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    The input list is not modified.
    """
    a = [list(r) for r in rows]
    if not a:
        return [], []
    n = len(a[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        if inv != 1:
            for j in range(c, n):
                if pr[j]:
                    pr[j] *= inv
        for i in range(len(a)):
            if i != r:
                f = a[i][c]
                if f:
                    ai = a[i]
                    for j in range(c, n):
                        if pr[j]:
                            ai[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def column_space_complement(span: list[list[Fraction]], candidates: list[list[Fraction]], dim: int) -> list[int]:
    """Indices of candidates that extend ``span`` to a larger space, greedily."""
    basis, pivots = rref(span, dim)
    rows = dict(zip(pivots, basis))
    chosen = []
    for idx, v in enumerate(candidates):
        w = list(v)
        for pc, row in rows.items():
            f = w[pc]
            if f:
                for j in range(dim):
                    if row[j]:
                        w[j] -= f * row[j]
        lead = next((j for j in range(dim) if w[j]), None)
        if lead is None:
            continue
        inv = 1 / w[lead]
        w = [x * inv for x in w]
        for pc, row in rows.items():
            f = row[lead]
            if f:
                for j in range(dim):
                    if w[j]:
                        row[j] -= f * w[j]
        rows[lead] = w
        chosen.append(idx)
    return chosen


def solve_in_basis(basis_rref: list[list[Fraction]], pivots: list[int], v: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates of ``v`` in the row space described by an RREF basis.

    Raises ``ValueError`` if ``v`` is not in the span.
    """
    coords = [v[p] for p in pivots]
    n = len(v)
    for j in range(n):
        s = sum((c * row[j] for c, row in zip(coords, basis_rref) if c and row[j]), Fraction(0))
        if s != v[j]:
            raise ValueError("vector is not in the span")
    return coords
