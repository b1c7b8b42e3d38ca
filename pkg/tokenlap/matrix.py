"""exact integer matrices: coordinate-sparse storage, checked 64-bit arithmetic and
fraction-free (Bareiss) elimination for rank and exact solves"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from tokenlap.errors import (
    MatrixDimensionError,
    MatrixOverflowError,
    NonIntegerSolutionError,
    SingularMatrixError,
)

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

Entry = Tuple[int, int, int]


def checked(value: int) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise MatrixOverflowError(
            f"Integer overflow: {value} does not fit into a signed 64-bit entry."
        )
    return value


class SparseIntMatrix:
    """row-major coordinate map (row -> {col: value}); zero entries are never stored.

    Instances are treated as immutable: every operation returns a new matrix.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Optional[Dict[int, Dict[int, int]]] = None):
        if rows < 0 or cols < 0:
            raise MatrixDimensionError(f"Negative matrix shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data: Dict[int, Dict[int, int]] = {}
        for r, row in (data or {}).items():
            cleaned = {c: checked(v) for c, v in row.items() if v != 0}
            if cleaned:
                self._data[r] = cleaned

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Entry]) -> "SparseIntMatrix":
        data: Dict[int, Dict[int, int]] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise MatrixDimensionError(
                    f"Entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )
            row = data.setdefault(r, {})
            row[c] = checked(row.get(c, 0) + v)
        return cls(rows, cols, data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        height = len(rows)
        width = len(rows[0]) if rows else 0
        data = {}
        for r, row in enumerate(rows):
            if len(row) != width:
                raise MatrixDimensionError("Ragged rows in dense matrix literal")
            data[r] = {c: int(v) for c, v in enumerate(row) if v}
        return cls(height, width, data)

    @classmethod
    def identity(cls, size: int) -> "SparseIntMatrix":
        return cls(size, size, {i: {i: 1} for i in range(size)})

    @classmethod
    def ones(cls, rows: int, cols: int) -> "SparseIntMatrix":
        return cls(rows, cols, {r: {c: 1 for c in range(cols)} for r in range(rows)})

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "SparseIntMatrix":
        return cls(len(values), len(values), {i: {i: v} for i, v in enumerate(values)})

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def get(self, r: int, c: int) -> int:
        return self._data.get(r, {}).get(c, 0)

    def row(self, r: int) -> Mapping[int, int]:
        return dict(self._data.get(r, {}))

    def entries(self) -> Iterator[Entry]:
        for r in sorted(self._data):
            row = self._data[r]
            for c in sorted(row):
                yield r, c, row[c]

    def column(self, c: int) -> Dict[int, int]:
        return {r: row[c] for r, row in self._data.items() if c in row}

    def transpose(self) -> "SparseIntMatrix":
        data: Dict[int, Dict[int, int]] = {}
        for r, row in self._data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return SparseIntMatrix(self.cols, self.rows, data)

    @property
    def T(self) -> "SparseIntMatrix":
        return self.transpose()

    def _combine(self, other: "SparseIntMatrix", sign: int) -> "SparseIntMatrix":
        if self.shape != other.shape:
            raise MatrixDimensionError(
                f"Cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}"
            )
        data = {r: dict(row) for r, row in self._data.items()}
        for r, row in other._data.items():
            target = data.setdefault(r, {})
            for c, v in row.items():
                target[c] = checked(target.get(c, 0) + sign * v)
        return SparseIntMatrix(self.rows, self.cols, data)

    def __add__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "SparseIntMatrix":
        return self.scale(-1)

    def scale(self, factor: int) -> "SparseIntMatrix":
        return SparseIntMatrix(
            self.rows,
            self.cols,
            {r: {c: checked(v * factor) for c, v in row.items()} for r, row in self._data.items()},
        )

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise MatrixDimensionError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        data: Dict[int, Dict[int, int]] = {}
        for r, row in self._data.items():
            acc: Dict[int, int] = {}
            for mid, v in row.items():
                for c, w in other._data.get(mid, {}).items():
                    acc[c] = checked(acc.get(c, 0) + checked(v * w))
            if acc:
                data[r] = acc
        return SparseIntMatrix(self.rows, other.cols, data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def first_difference(self, other: "SparseIntMatrix") -> Optional[Entry]:
        """first (row, col) in row-major order where the matrices disagree, as (r, c, self[r,c])"""
        if self.shape != other.shape:
            raise MatrixDimensionError(
                f"Cannot compare {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        keys = set()
        for data in (self._data, other._data):
            for r, row in data.items():
                keys.update((r, c) for c in row)
        for r, c in sorted(keys):
            if self.get(r, c) != other.get(r, c):
                return r, c, self.get(r, c)
        return None

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def row_sums(self) -> List[int]:
        return [sum(self._data.get(r, {}).values()) for r in range(self.rows)]

    def trace(self) -> int:
        return sum(self.get(i, i) for i in range(min(self.rows, self.cols)))

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, row in self._data.items():
            for c, v in row.items():
                dense[r][c] = v
        return dense

    def to_numpy(self, dtype=float) -> np.ndarray:
        array = np.zeros((self.rows, self.cols), dtype=dtype)
        for r, row in self._data.items():
            for c, v in row.items():
                array[r, c] = v
        return array

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """floating-point product with a vector or a column block"""
        vector = np.asarray(vector, dtype=float)
        if vector.shape[0] != self.cols:
            raise MatrixDimensionError(
                f"Vector of length {vector.shape[0]} does not match {self.cols} columns"
            )
        result = np.zeros((self.rows,) + vector.shape[1:], dtype=float)
        for r, row in self._data.items():
            for c, v in row.items():
                result[r] += v * vector[c]
        return result


def mat_mul(a: SparseIntMatrix, b: SparseIntMatrix) -> SparseIntMatrix:
    return a @ b


def mat_transpose(a: SparseIntMatrix) -> SparseIntMatrix:
    return a.transpose()


def mat_add(a: SparseIntMatrix, b: SparseIntMatrix) -> SparseIntMatrix:
    return a + b


def mat_sub(a: SparseIntMatrix, b: SparseIntMatrix) -> SparseIntMatrix:
    return a - b


def mat_scale(a: SparseIntMatrix, factor: int) -> SparseIntMatrix:
    return a.scale(factor)


def mat_eq(a: SparseIntMatrix, b: SparseIntMatrix) -> bool:
    return a == b


def _eliminate(value_a: int, value_b: int, value_c: int, value_d: int, divisor: int) -> int:
    # (a*b - c*d) / divisor, exact by Sylvester's identity
    numerator = checked(checked(value_a * value_b) - checked(value_c * value_d))
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise NonIntegerSolutionError(
            f"Fraction-free step {numerator}/{divisor} is not exact"
        )
    return quotient


def exact_rank(a: SparseIntMatrix) -> int:
    """rank over the rationals by Bareiss elimination with row pivoting"""
    work = a.to_dense()
    height, width = a.rows, a.cols
    rank = 0
    previous = 1
    for col in range(width):
        if rank == height:
            break
        pivot = next((r for r in range(rank, height) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pivot_value = work[rank][col]
        pivot_row = work[rank]
        for r in range(rank + 1, height):
            row = work[r]
            factor = row[col]
            for c in range(col + 1, width):
                row[c] = _eliminate(pivot_value, row[c], factor, pivot_row[c], previous)
            row[col] = 0
        previous = pivot_value
        rank += 1
    return rank


def exact_solve(a: SparseIntMatrix, b: SparseIntMatrix) -> SparseIntMatrix:
    """solve a @ x = b for square nonsingular a with fraction-free Gauss-Jordan elimination.

    Every entry of x must be an integer; a fractional entry raises NonIntegerSolutionError.
    """
    if a.rows != a.cols:
        raise MatrixDimensionError(f"Exact solve needs a square matrix, got {a.rows}x{a.cols}")
    if b.rows != a.rows:
        raise MatrixDimensionError(
            f"Right-hand side has {b.rows} rows, expected {a.rows}"
        )
    size = a.rows
    left = a.to_dense()
    right = b.to_dense()
    work = [left[i] + right[i] for i in range(size)]
    width = size + b.cols
    previous = 1
    for k in range(size):
        pivot = next((r for r in range(k, size) if work[r][k] != 0), None)
        if pivot is None:
            raise SingularMatrixError()
        work[k], work[pivot] = work[pivot], work[k]
        pivot_row = work[k]
        pivot_value = pivot_row[k]
        for i in range(size):
            if i == k:
                continue
            row = work[i]
            factor = row[k]
            for j in range(width):
                if j != k:
                    row[j] = _eliminate(pivot_value, row[j], factor, pivot_row[j], previous)
            row[k] = 0
        previous = pivot_value

    data: Dict[int, Dict[int, int]] = {}
    for i in range(size):
        diagonal = work[i][i]
        for j in range(b.cols):
            quotient, remainder = divmod(work[i][size + j], diagonal)
            if remainder:
                raise NonIntegerSolutionError(
                    f"Solution entry ({i}, {j}) = {work[i][size + j]}/{diagonal} is not an integer"
                )
            if quotient:
                data.setdefault(i, {})[j] = quotient
    return SparseIntMatrix(size, b.cols, data)
