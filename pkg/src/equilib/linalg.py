"""Exact dense matrices over the integers and rationals.

Entries are Python ints or ``fractions.Fraction``; a Fraction with unit
denominator is stored as an int so that printing and hashing stay tidy.
Matrices are immutable and hashable, which lets group elements be used
directly as set members and dict keys.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence


def clean(q):
    """Return ``q`` as an int when it is integral, else as a Fraction."""
    if isinstance(q, int):
        return q
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else q


def qstr(q) -> str:
    """Exact string form of a rational, ``"p/q"`` or ``"p"``."""
    return str(Fraction(q))


class Matrix:
    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(clean(v) for v in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        return cls(zip(*columns))

    # shape and access -------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def trace(self):
        return clean(sum(self.rows[i][i] for i in range(len(self.rows))))

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for r in self.rows for v in r)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    # arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        return Matrix([[scalar * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            cols = list(zip(*other.rows))
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        # column vector
        return tuple(clean(sum(a * b for a, b in zip(r, other))) for r in self.rows)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(len(self.rows))
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return "Matrix(%s)" % ([[qstr(v) for v in r] for r in self.rows],)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    # elimination ------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row-echelon form and pivot columns.

        Pivots are taken left to right, top to bottom, so the result is
        canonical for the row space.
        """
        m = [[Fraction(v) for v in r] for r in self.rows]
        nrows, ncols = self.shape
        pivots = []
        row = 0
        for col in range(ncols):
            if row == nrows:
                break
            pr = next((i for i in range(row, nrows) if m[i][col] != 0), None)
            if pr is None:
                continue
            m[row], m[pr] = m[pr], m[row]
            piv = m[row][col]
            m[row] = [v / piv for v in m[row]]
            for i in range(nrows):
                if i != row and m[i][col] != 0:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
        return Matrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [[Fraction(v) for v in r] for r in self.rows]
        det = Fraction(1)
        for col in range(n):
            pr = next((i for i in range(col, n) if a[i][col] != 0), None)
            if pr is None:
                return 0
            if pr != col:
                a[col], a[pr] = a[pr], a[col]
                det = -det
            piv = a[col][col]
            det *= piv
            for i in range(col + 1, n):
                if a[i][col] != 0:
                    f = a[i][col] / piv
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
        return clean(det)

    def inverse(self) -> "Matrix":
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        aug = Matrix([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)])
        red, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix([r[n:] for r in red.rows])


def column_space(vectors: Sequence[Sequence]) -> Matrix:
    """Canonical basis (as RREF rows) of the span of ``vectors``."""
    if not vectors:
        return Matrix([])
    red, pivots = Matrix(vectors).rref()
    return Matrix(red.rows[: len(pivots)])


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return column_space(a).rows == column_space(b).rows


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
