"""Exact matrices over a field.

:class:`ExactMatrix` wraps a 2-D :mod:`galois` array together with the
:class:`~mpcodes.field.FieldSpec` it lives over. Empty shapes (0 rows or
0 columns) are valid everywhere; galois is never handed one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from mpcodes.errors import DimensionMismatchError, OutOfRangeError, SpecMismatchError
from mpcodes.field import FieldElement, FieldSpec


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """A rows x cols matrix over ``spec``; immutable value type."""

    spec: FieldSpec
    array: Any

    def __post_init__(self) -> None:
        if type(self.array) is not self.spec.gf:
            raise SpecMismatchError(f"array is not over {self.spec}")
        if self.array.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got {self.array.ndim}-D")

    @classmethod
    def from_rows(
        cls,
        spec: FieldSpec,
        rows: Sequence[Sequence[int]],
        cols: int | None = None,
    ) -> "ExactMatrix":
        """Build from integer encodings, one sequence per row.

        ``cols`` is required only when ``rows`` is empty.
        """
        if len(rows) == 0:
            if cols is None:
                raise DimensionMismatchError("cols is required for a matrix without rows")
            return zeros(spec, 0, cols)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("rows have different lengths")
        if cols is not None and cols != width:
            raise DimensionMismatchError(f"rows have {width} entries, expected {cols}")
        data = np.array(rows, dtype=np.int64).reshape(len(rows), width)
        if data.size and (data.min() < 0 or data.max() >= spec.order):
            raise OutOfRangeError(f"entries must lie in [0, {spec.order})")
        return cls(spec, spec.gf(data))

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[FieldElement]]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise DimensionMismatchError("from_elements needs at least one entry")
        spec = rows[0][0].spec
        if any(e.spec != spec for r in rows for e in r):
            raise SpecMismatchError("entries live over different fields")
        return cls.from_rows(spec, [[e.value for e in r] for r in rows])

    @property
    def rows(self) -> int:
        return int(self.array.shape[0])

    @property
    def cols(self) -> int:
        return int(self.array.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def element(self, i: int, j: int) -> FieldElement:
        """Entry at 0-based position (i, j)."""
        return FieldElement(self.spec, int(self.array[i, j]))

    def to_ints(self) -> list[list[int]]:
        return np.asarray(self.array, dtype=np.int64).tolist()

    def row(self, i: int) -> "ExactMatrix":
        """Row ``i`` (0-based) as a 1 x cols matrix."""
        return ExactMatrix(self.spec, self.array[i : i + 1, :].copy())

    def top_rows(self, count: int) -> "ExactMatrix":
        """The first ``count`` rows."""
        if not 0 <= count <= self.rows:
            raise OutOfRangeError(f"cannot take {count} of {self.rows} rows")
        return ExactMatrix(self.spec, self.array[:count, :].copy())

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        r = list(rows)
        c = list(cols)
        return ExactMatrix(self.spec, self.array[np.ix_(r, c)].copy())

    def is_zero(self) -> bool:
        return not np.any(np.asarray(self.array))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.shape == other.shape
            and bool(np.array_equal(np.asarray(self.array), np.asarray(other.array)))
        )

    def __hash__(self) -> int:
        data = np.asarray(self.array, dtype=np.int64).tobytes()
        return hash((self.spec, self.shape, data))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.spec}, {self.to_ints()})"


def _check_same(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.spec != b.spec:
        raise SpecMismatchError(f"{a.spec} and {b.spec} differ")


def zeros(spec: FieldSpec, rows: int, cols: int) -> ExactMatrix:
    return ExactMatrix(spec, spec.gf.Zeros((rows, cols)))


def identity(spec: FieldSpec, k: int) -> ExactMatrix:
    return ExactMatrix(spec, spec.gf.Identity(k))


def flip_matrix(spec: FieldSpec, t: int) -> ExactMatrix:
    """The t x t anti-diagonal identity J_t."""
    return ExactMatrix(spec, spec.gf(np.fliplr(np.eye(t, dtype=np.int64))))


def vstack(spec: FieldSpec, cols: int, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    """Stack matrices with ``cols`` columns; an empty stack is 0 x cols."""
    for b in blocks:
        if b.spec != spec:
            raise SpecMismatchError(f"{b.spec} and {spec} differ")
        if b.cols != cols:
            raise DimensionMismatchError(f"block has {b.cols} columns, expected {cols}")
    parts = [np.asarray(b.array, dtype=np.int64) for b in blocks if b.rows]
    if not parts:
        return zeros(spec, 0, cols)
    return ExactMatrix(spec, spec.gf(np.concatenate(parts, axis=0)))


def multiply(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_same(a, b)
    if a.cols != b.rows:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return zeros(a.spec, a.rows, b.cols)
    return ExactMatrix(a.spec, a.array @ b.array)


def transpose(a: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(a.spec, a.array.T.copy())


def conjugate(a: ExactMatrix) -> ExactMatrix:
    """Entrywise x -> x^q."""
    q = a.spec.q
    if a.array.size == 0:
        return a
    return ExactMatrix(a.spec, a.array**q)


def conj_transpose(a: ExactMatrix) -> ExactMatrix:
    """A-dagger: the transpose of the entrywise conjugate."""
    return transpose(conjugate(a))


def rank(a: ExactMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return int(np.linalg.matrix_rank(a.array))


def rref(a: ExactMatrix) -> ExactMatrix:
    """Reduced row echelon form, same shape as ``a``."""
    if a.rows == 0 or a.cols == 0:
        return a
    return ExactMatrix(a.spec, a.array.row_reduce())


def nonzero_rows(a: ExactMatrix) -> ExactMatrix:
    if a.rows == 0:
        return a
    mask = np.count_nonzero(np.asarray(a.array), axis=1) > 0
    return ExactMatrix(a.spec, a.array[mask, :].copy())


def kernel(a: ExactMatrix) -> ExactMatrix:
    """Basis in RREF of the right null space {x : A x^T = 0}."""
    if a.cols == 0:
        return zeros(a.spec, 0, 0)
    if a.rows == 0:
        return identity(a.spec, a.cols)
    if rank(a) == a.cols:
        return zeros(a.spec, 0, a.cols)
    basis = ExactMatrix(a.spec, a.array.null_space())
    return nonzero_rows(rref(basis))


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """A ⊗ B with block (i, j) equal to a_ij · B."""
    _check_same(a, b)
    rows, cols = a.rows * b.rows, a.cols * b.cols
    if rows == 0 or cols == 0:
        return zeros(a.spec, rows, cols)
    blocks = a.array[:, None, :, None] * b.array[None, :, None, :]
    return ExactMatrix(a.spec, blocks.reshape(rows, cols))


def determinant(a: ExactMatrix) -> FieldElement:
    if not a.is_square:
        raise DimensionMismatchError(f"determinant of non-square {a.shape} matrix")
    if a.rows == 0:
        return FieldElement(a.spec, 1)
    return FieldElement(a.spec, int(np.linalg.det(a.array)))
