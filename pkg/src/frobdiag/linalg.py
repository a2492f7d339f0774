"""Exact dense linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries, so results are
exact: a computed inverse really multiplies back to the identity, and a
nullspace vector really annihilates the matrix.  Kernels and solution sets
are returned in reduced-echelon normal form so that two runs (or two
different call sites) can be compared with plain equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class SingularMatrixError(ValueError):
    """Raised when a square matrix has no inverse."""


def frac(value: int | str | Fraction) -> Fraction:
    """Coerce an int, ``"p/q"`` string, or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(frac(v) for v in values)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence[int | str | Fraction]]):
        data = tuple(tuple(frac(v) for v in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("rows have unequal lengths")
        else:
            width = 0
        self.rows = len(data)
        self.cols = width
        self._data = data

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix([[Fraction(0)] * cols for _ in range(rows)])

    @staticmethod
    def from_rows(rows: Sequence[Vector]) -> "Matrix":
        return Matrix([list(r) for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._data)

    def row_list(self) -> list[list[Fraction]]:
        """Mutable copy of the entries, for elimination routines."""
        return [list(row) for row in self._data]

    def transpose(self) -> "Matrix":
        return Matrix([[self._data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._data for v in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self._data, other._data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-v for v in row] for row in self._data])

    def scale(self, c: int | str | Fraction) -> "Matrix":
        c = frac(c)
        return Matrix([[c * v for v in row] for row in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch for product: {self.shape} @ {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc += self._data[i][k] * other._data[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != cols {self.cols}")
        return tuple(sum((row[k] * v[k] for k in range(self.cols)),
                         Fraction(0)) for row in self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")


def _rref_in_place(data: list[list[Fraction]]) -> list[int]:
    """Reduce ``data`` to reduced row echelon form; return pivot columns."""
    n_rows = len(data)
    n_cols = len(data[0]) if data else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if data[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = 1 / data[r][c]
        data[r] = [v * inv for v in data[r]]
        for i in range(n_rows):
            if i != r and data[i][c] != 0:
                f = data[i][c]
                data[i] = [a - f * b for a, b in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    data = m.row_list()
    pivots = _rref_in_place(data)
    return Matrix(data), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def invert(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix.

    Raises :class:`SingularMatrixError` when the determinant is zero.
    """
    if not m.is_square():
        raise ValueError(f"cannot invert non-square matrix {m.shape}")
    n = m.rows
    data = [list(m.row(i)) + [Fraction(i == j) for j in range(n)]
            for i in range(n)]
    pivots = _rref_in_place(data)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return Matrix([row[n:] for row in data])


def nullspace(m: Matrix) -> list[Vector]:
    """Echelon-normalized basis of ``{v : m @ v = 0}``.

    Each free column yields one basis vector carrying 1 at that column and
    0 at every other free column, listed in increasing column order.  The
    basis is therefore canonical: equal spaces give equal output.
    """
    reduced, pivots = rref(m)
    n_cols = m.cols
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence[Fraction]) -> tuple[Vector, list[Vector]] | None:
    """Solve ``m @ x = b`` exactly.

    Returns ``(particular, kernel_basis)`` with free variables of the
    particular solution pinned to zero, or ``None`` when the system is
    inconsistent.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side length {len(b)} != rows {m.rows}")
    n_cols = m.cols
    data = [list(m.row(i)) + [frac(b[i])] for i in range(m.rows)]
    pivots = _rref_in_place(data)
    if n_cols in pivots:
        return None  # a pivot in the augmented column: 0 = 1
    x = [Fraction(0)] * n_cols
    for r, p in enumerate(pivots):
        x[p] = data[r][n_cols]
    return tuple(x), nullspace(m)
