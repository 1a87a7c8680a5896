"""Dense exact rational matrices and Gauss-Jordan elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class InconsistentSystem(ArithmeticError):
    pass


class Matrix:
    """A dense matrix of :class:`fractions.Fraction` entries."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.data = [[Fraction(0)] * cols for _ in range(rows)]
        else:
            self.data = [[Fraction(x) for x in row] for row in entries]
            if len(self.data) != rows or any(len(r) != cols for r in self.data):
                raise ValueError("entries do not match the stated shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = Fraction(1)
        return m

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.data[i][j] = Fraction(value)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.data == other.data

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = Matrix(self.rows, other.cols)
        for i, row in enumerate(self.data):
            for k, a in enumerate(row):
                if a:
                    orow = other.data[k]
                    target = out.data[i]
                    for j in range(other.cols):
                        if orow[j]:
                            target[j] += a * orow[j]
        return out

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def apply(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((a * Fraction(v) for a, v in zip(row, vector)), Fraction(0))
                for row in self.data]

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows
                      else [[] for _ in range(self.cols)])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.data)

    def trace(self) -> Fraction:
        return sum((self.data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def copy(self) -> Matrix:
        return Matrix(self.rows, self.cols, self.data)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns.

    Pivots are taken as the first non-zero entry, scanning columns left to
    right and rows top to bottom.
    """
    a = [row[:] for row in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = Matrix(m.rows, m.cols)
    out.data = a
    return out, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """A basis of ``{v : m v = 0}``, one vector per free column."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -reduced.data[row][f]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs: Sequence) -> list[Fraction]:
    """One solution of ``m x = rhs`` (free variables set to zero)."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = Matrix(m.rows, m.cols + 1,
                       [row + [Fraction(b)] for row, b in zip(m.data, rhs)])
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        raise InconsistentSystem("system has no solution")
    x = [Fraction(0)] * m.cols
    for row, p in enumerate(pivots):
        x[p] = reduced.data[row][m.cols]
    return x
