"""Dense linear algebra over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf import FieldSpec


class DimensionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MatrixGF:
    """A dense rows x cols matrix of field-element encodings.

    ``entries`` is a read-only int64 array.  Equality compares field and
    entries.
    """

    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise DimensionError(f"matrix entries must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.q):
            raise ValueError(f"entries outside [0, {self.field.q}) for {self.field}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixGF:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        if len({len(r) for r in rows}) != 1:
            raise DimensionError("ragged rows")
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field}, {self.entries.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def column(self, j: int) -> np.ndarray:
        return self.entries[:, j]

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, self.entries.T)

    def submatrix(self, rows=None, cols=None) -> MatrixGF:
        e = self.entries
        if rows is not None:
            e = e[list(rows), :]
        if cols is not None:
            e = e[:, list(cols)]
        return MatrixGF(self.field, e)

    def delete_columns(self, positions) -> MatrixGF:
        drop = set(positions)
        keep = [j for j in range(self.cols) if j not in drop]
        return MatrixGF(self.field, self.entries[:, keep].reshape(self.rows, len(keep)))

    def hstack(self, other: MatrixGF) -> MatrixGF:
        _same_field(self, other)
        if self.rows != other.rows:
            raise DimensionError(f"hstack needs equal row counts, got {self.rows} and {other.rows}")
        return MatrixGF(self.field, np.hstack([self.entries, other.entries]))

    def vstack(self, other: MatrixGF) -> MatrixGF:
        _same_field(self, other)
        if self.cols != other.cols:
            raise DimensionError(f"vstack needs equal column counts, got {self.cols} and {other.cols}")
        return MatrixGF(self.field, np.vstack([self.entries, other.entries]))

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        return matmul(self, other)


def _same_field(a: MatrixGF, b: MatrixGF) -> None:
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")


def field_matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Raw product of two encoding arrays (``a`` is r x l, ``b`` is l x c)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for l in range(a.shape[1]):
        acc = field.add_raw(acc, field.mul_raw(a[:, l, None], b[None, l, :]))
    return np.asarray(acc, dtype=np.int64)


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    _same_field(a, b)
    return MatrixGF(a.field, field_matmul(a.field, a.entries, b.entries))


def rref(M: MatrixGF) -> tuple[MatrixGF, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are taken column by column from the left; within a column the
    topmost available nonzero row is used.
    """
    F = M.field
    R = M.entries.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        s = r + int(nz[0])
        if s != r:
            R[[r, s]] = R[[s, r]]
        pivot = int(R[r, c])
        if pivot != 1:
            R[r] = F.mul_raw(R[r], np.int64(F.inv(pivot)))
        factors = R[:, c].copy()
        factors[r] = 0
        others = np.nonzero(factors)[0]
        if others.size:
            scaled = F.mul_raw(factors[others, None], R[None, r, :])
            R[others] = F.add_raw(R[others], F._neg_arr(scaled))
        pivots.append(c)
        r += 1
    return MatrixGF(F, R), pivots


def rank(M: MatrixGF) -> int:
    return len(rref(M)[1])


def null_space(M: MatrixGF) -> MatrixGF:
    """Basis (as rows) of ``{x : M x^T = 0}``, one vector per free column.

    The vector for free column f has a 1 in position f, zeros at the other
    free columns, and is ordered by increasing f.
    """
    F = M.field
    R, pivots = rref(M)
    n = M.cols
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg(int(R.entries[r, f]))
    return MatrixGF(F, basis)


def row_space_equal(a: MatrixGF, b: MatrixGF) -> bool:
    """True iff the two matrices have the same row space."""
    _same_field(a, b)
    if a.cols != b.cols:
        return False
    ra, pa = rref(a)
    rb, pb = rref(b)
    return pa == pb and np.array_equal(ra.entries[: len(pa)], rb.entries[: len(pb)])


def mat_vec(M: MatrixGF, v: Sequence[int]) -> np.ndarray:
    """``M v^T`` as a length-rows vector."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.cols,):
        raise DimensionError(f"vector of length {v.shape} against {M.shape} matrix")
    return field_matmul(M.field, M.entries, v[:, None])[:, 0]


def vec_mat(v: Sequence[int], M: MatrixGF) -> np.ndarray:
    """``v M``: the codeword of message ``v`` when M is a generator matrix."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.rows,):
        raise DimensionError(f"vector of length {v.shape} against {M.shape} matrix")
    return field_matmul(M.field, v[None, :], M.entries)[0]


def functional_apply(field: FieldSpec, a: Sequence[int], g: Sequence[int]) -> int:
    """Evaluate the linear functional ``a`` at the column vector ``g``."""
    return field.dot(a, g)
