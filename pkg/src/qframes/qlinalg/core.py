"""Vectors and matrices over the quaternions.

Convention: scalars act on the right of vectors, matrices act on the left,
``(A v)_i = sum_j A_ij v_j``. Under this convention every matrix is a right
linear map, ``A (v q) = (A v) q``.

Storage is a read-only float64 array whose last axis holds the four
quaternion components: shape ``(n, 4)`` for a vector and ``(m, n, 4)`` for a
matrix.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from ..errors import DimensionMismatch, InvalidInput
from ..quaternion import Quaternion, conj_array, hamilton, modulus_array
from ..tolerances import Tolerances, resolve

__all__ = [
    "QVector",
    "QMatrix",
    "inner",
    "norm",
    "adjoint",
    "matmul",
    "matvec",
    "add",
    "embed_real",
    "unembed_vector",
    "gram",
    "is_hermitian",
    "columns_matrix",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64, copy=True)
    if not np.all(np.isfinite(a)):
        raise InvalidInput("non-finite quaternion component")
    a.flags.writeable = False
    return a


def _as_quat_array(entries) -> np.ndarray:
    if isinstance(entries, np.ndarray):
        return np.asarray(entries, dtype=np.float64)
    return np.array([Quaternion.coerce(e).to_array() for e in entries], dtype=np.float64).reshape(-1, 4)


class QVector:
    """An element of H^n under right scalar multiplication."""

    __slots__ = ("_data",)

    def __init__(self, entries):
        data = _as_quat_array(entries)
        if data.ndim != 2 or data.shape[1] != 4 or data.shape[0] < 1:
            raise InvalidInput(f"a QVector needs shape (n>=1, 4), got {data.shape}")
        self._data = _frozen(data)

    @classmethod
    def zeros(cls, n: int) -> QVector:
        return cls(np.zeros((n, 4)))

    @classmethod
    def basis(cls, n: int, i: int) -> QVector:
        """The i-th standard unit vector (0-based)."""
        data = np.zeros((n, 4))
        data[i, 0] = 1.0
        return cls(data)

    @classmethod
    def from_real(cls, values) -> QVector:
        values = np.asarray(values, dtype=float).reshape(-1)
        data = np.zeros((values.size, 4))
        data[:, 0] = values
        return cls(data)

    @classmethod
    def from_list(cls, items) -> QVector:
        return cls(np.asarray(items, dtype=float).reshape(-1, 4))

    @property
    def data(self) -> np.ndarray:
        return self._data

    def __len__(self) -> int:
        return self._data.shape[0]

    @property
    def n(self) -> int:
        return self._data.shape[0]

    def __getitem__(self, i) -> Quaternion:
        return Quaternion.from_array(self._data[i])

    def __iter__(self):
        for row in self._data:
            yield Quaternion.from_array(row)

    def to_list(self) -> list[list[float]]:
        return self._data.tolist()

    def _check(self, other: QVector):
        if len(other) != len(self):
            raise DimensionMismatch(f"vector lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        self._check(other)
        return QVector(self._data + other._data)

    def __sub__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        self._check(other)
        return QVector(self._data - other._data)

    def __neg__(self) -> QVector:
        return QVector(-self._data)

    def __mul__(self, q):
        # right scalar action v q
        if isinstance(q, Quaternion):
            return QVector(hamilton(self._data, q.to_array()))
        if isinstance(q, (int, float, np.floating, np.integer)) and not isinstance(q, bool):
            return QVector(self._data * float(q))
        return NotImplemented

    def __rmul__(self, r):
        # only real scalars commute with vectors
        if isinstance(r, (int, float, np.floating, np.integer)) and not isinstance(r, bool):
            return QVector(self._data * float(r))
        return NotImplemented

    def __truediv__(self, r):
        if isinstance(r, (int, float, np.floating, np.integer)) and not isinstance(r, bool):
            return QVector(self._data / float(r))
        if isinstance(r, Quaternion):
            return self * r.inverse()
        return NotImplemented

    def isclose(self, other: QVector, tol: float | None = None) -> bool:
        self._check(other)
        tol = resolve(None).eq if tol is None else tol
        return bool(np.all(np.abs(self._data - other._data) <= tol))

    def max_abs_diff(self, other: QVector) -> float:
        self._check(other)
        return float(np.max(np.abs(self._data - other._data)))

    def __eq__(self, other):
        if not isinstance(other, QVector):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"QVector({self._data.tolist()!r})"


class QMatrix:
    """An m x n quaternion matrix acting on column vectors from the left."""

    __slots__ = ("_data",)

    def __init__(self, data):
        if not isinstance(data, np.ndarray):
            rows = [[Quaternion.coerce(e).to_array() for e in row] for row in data]
            data = np.array(rows, dtype=np.float64)
        data = np.asarray(data, dtype=np.float64)
        if data.ndim != 3 or data.shape[2] != 4 or data.shape[0] < 1 or data.shape[1] < 1:
            raise InvalidInput(f"a QMatrix needs shape (m, n, 4), got {data.shape}")
        self._data = _frozen(data)

    @classmethod
    def from_columns(cls, columns: Sequence[QVector]) -> QMatrix:
        columns = list(columns)
        if not columns:
            raise InvalidInput("no columns given")
        n = len(columns[0])
        for c in columns:
            if len(c) != n:
                raise DimensionMismatch("columns have different lengths")
        return cls(np.stack([c.data for c in columns], axis=1))

    @classmethod
    def from_list(cls, columns) -> QMatrix:
        """Inverse of :meth:`to_list`: an array of columns of 4-arrays."""
        arr = np.asarray(columns, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise InvalidInput(f"expected an array of columns of 4-arrays, got shape {arr.shape}")
        return cls(np.transpose(arr, (1, 0, 2)))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> QMatrix:
        return cls(np.zeros((m, m if n is None else n, 4)))

    @classmethod
    def diag(cls, entries: Iterable) -> QMatrix:
        quats = [Quaternion.coerce(e) for e in entries]
        n = len(quats)
        data = np.zeros((n, n, 4))
        for i, q in enumerate(quats):
            data[i, i] = q.to_array()
        return cls(data)

    @classmethod
    def from_real(cls, values) -> QMatrix:
        values = np.atleast_2d(np.asarray(values, dtype=float))
        data = np.zeros(values.shape + (4,))
        data[..., 0] = values
        return cls(data)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape[0], self._data.shape[1]

    def __getitem__(self, idx) -> Quaternion:
        i, j = idx
        return Quaternion.from_array(self._data[i, j])

    def column(self, j: int) -> QVector:
        return QVector(self._data[:, j])

    def columns(self) -> list[QVector]:
        return [self.column(j) for j in range(self.shape[1])]

    def to_list(self) -> list:
        """Array of columns, each an array of quaternion 4-arrays."""
        return np.transpose(self._data, (1, 0, 2)).tolist()

    @property
    def H(self) -> QMatrix:
        return adjoint(self)

    def max_modulus(self) -> float:
        return float(np.max(modulus_array(self._data)))

    def __add__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return QMatrix(self._data - other._data)

    def __neg__(self) -> QMatrix:
        return QMatrix(-self._data)

    def __mul__(self, r):
        if isinstance(r, (int, float, np.floating, np.integer)) and not isinstance(r, bool):
            return QMatrix(self._data * float(r))
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return matmul(self, other)
        if isinstance(other, QVector):
            return matvec(self, other)
        return NotImplemented

    def isclose(self, other: QMatrix, tol: float | None = None) -> bool:
        if other.shape != self.shape:
            return False
        tol = resolve(None).eq if tol is None else tol
        return bool(np.all(np.abs(self._data - other._data) <= tol))

    def max_abs_diff(self, other: QMatrix) -> float:
        if other.shape != self.shape:
            raise DimensionMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return float(np.max(np.abs(self._data - other._data)))

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"QMatrix(shape={self.shape})"


def columns_matrix(vectors: Sequence[QVector]) -> QMatrix:
    """The matrix whose columns are ``vectors`` (synthesis matrix of a family)."""
    return QMatrix.from_columns(vectors)


def inner(p: QVector, q: QVector) -> Quaternion:
    """``sum_i conj(p_i) q_i``; conjugate-linear in the first slot."""
    if len(p) != len(q):
        raise DimensionMismatch(f"vector lengths differ: {len(p)} vs {len(q)}")
    return Quaternion.from_array(np.sum(hamilton(conj_array(p.data), q.data), axis=0))


def norm(v: QVector) -> float:
    # <v|v> is the sum of squared components; hypot avoids under/overflow
    return math.hypot(*v.data.ravel())


def adjoint(A: QMatrix) -> QMatrix:
    return QMatrix(conj_array(np.transpose(A.data, (1, 0, 2))))


def matmul(A: QMatrix, B: QMatrix) -> QMatrix:
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    prod = hamilton(A.data[:, :, None, :], B.data[None, :, :, :])
    return QMatrix(prod.sum(axis=1))


def matvec(A: QMatrix, v: QVector) -> QVector:
    if A.shape[1] != len(v):
        raise DimensionMismatch(f"cannot apply {A.shape} matrix to vector of length {len(v)}")
    return QVector(hamilton(A.data, v.data[None, :, :]).sum(axis=1))


def add(A: QMatrix, B: QMatrix) -> QMatrix:
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes differ: {A.shape} vs {B.shape}")
    return QMatrix(A.data + B.data)


def _left_blocks(a: np.ndarray) -> np.ndarray:
    """4x4 real left-multiplication blocks for quaternion array (..., 4)."""
    w, x, y, z = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    rows = [
        [w, -x, -y, -z],
        [x, w, -z, y],
        [y, z, w, -x],
        [z, -y, x, w],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def embed_real(A: QMatrix) -> np.ndarray:
    """The 4m x 4n real matrix obtained by replacing each entry by its 4x4
    left-multiplication block.

    The map is an algebra homomorphism, ``embed(AB) = embed(A) embed(B)``, and
    turns the quaternionic adjoint into the transpose.
    """
    m, n = A.shape
    blocks = _left_blocks(A.data)  # (m, n, 4, 4)
    return blocks.transpose(0, 2, 1, 3).reshape(4 * m, 4 * n)


def unembed_vector(x: np.ndarray) -> QVector:
    """Inverse of ``v -> embed_real(v)[:, 0]``: group a real 4n-vector by fours."""
    x = np.asarray(x, dtype=float)
    return QVector(x.reshape(-1, 4))


def gram(vectors: Sequence[QVector]) -> QMatrix:
    """``G_ij = <x_i|x_j>``, equivalently ``X* X`` for the column matrix X."""
    X = columns_matrix(vectors)
    return matmul(adjoint(X), X)


def is_hermitian(A: QMatrix, tol: Tolerances | None = None) -> bool:
    tol = resolve(tol)
    m, n = A.shape
    if m != n:
        return False
    scale = max(1.0, A.max_modulus())
    return bool(np.max(np.abs(A.data - adjoint(A).data)) <= tol.eq * scale)
