"""Gaussian elimination over the quaternion division ring.

Row operations multiply rows on the left, ``row_r <- row_r - f * row_p``,
which preserves the solution set of ``A x = b`` for right-linear ``A``.
Pivots are chosen by maximal modulus in the current column, ties going to
the lowest row index.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..errors import DimensionMismatch, Singular
from ..quaternion import hamilton, inverse_array, modulus_array
from ..tolerances import Tolerances, resolve
from .core import QMatrix, QVector, columns_matrix

__all__ = ["rref", "rank", "solve", "invert", "nullspace", "is_complete", "rank_threshold"]


def rank_threshold(data: np.ndarray, tol: Tolerances) -> float:
    """Absolute pivot cutoff: ``tol.rank`` times the largest entry modulus."""
    if data.size == 0:
        return 0.0
    return tol.rank * float(np.max(modulus_array(data)))


def rref(data: np.ndarray, pivot_cols: int, threshold: float) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a quaternion array of shape (m, c, 4).

    Only the first ``pivot_cols`` columns are eligible as pivots; the rest
    ride along (augmented right-hand sides). Pivot entries are normalised
    to 1. Returns the reduced array and the list of pivot columns.
    """
    R = np.array(data, dtype=np.float64, copy=True)
    m = R.shape[0]
    pivots: list[int] = []
    row = 0
    for col in range(pivot_cols):
        if row >= m:
            break
        mods = modulus_array(R[row:, col])
        best = int(np.argmax(mods))
        if mods[best] <= threshold:
            continue
        p = row + best
        if p != row:
            R[[row, p]] = R[[p, row]]
        R[row] = hamilton(inverse_array(R[row, col])[None, :], R[row])
        R[row, col] = (1.0, 0.0, 0.0, 0.0)
        others = np.arange(m) != row
        factors = R[others, col]  # (m-1, 4)
        R[others] -= hamilton(factors[:, None, :], R[row][None, :, :])
        R[others, col] = 0.0
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A: QMatrix, tol: Tolerances | None = None) -> int:
    tol = resolve(tol)
    _, pivots = rref(A.data, A.shape[1], rank_threshold(A.data, tol))
    return len(pivots)


def _require_square(A: QMatrix):
    m, n = A.shape
    if m != n:
        raise DimensionMismatch(f"square matrix required, got {A.shape}")


def solve(A: QMatrix, b: QVector, tol: Tolerances | None = None) -> QVector:
    """The unique x with ``A x = b``."""
    tol = resolve(tol)
    _require_square(A)
    n = A.shape[0]
    if len(b) != n:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {n}")
    aug = np.concatenate([A.data, b.data[:, None, :]], axis=1)
    R, pivots = rref(aug, n, rank_threshold(A.data, tol))
    if len(pivots) < n:
        raise Singular(f"matrix is singular (rank {len(pivots)} < {n})")
    return QVector(R[:, n])


def invert(A: QMatrix, tol: Tolerances | None = None) -> QMatrix:
    tol = resolve(tol)
    _require_square(A)
    n = A.shape[0]
    aug = np.concatenate([A.data, QMatrix.identity(n).data], axis=1)
    R, pivots = rref(aug, n, rank_threshold(A.data, tol))
    if len(pivots) < n:
        raise Singular(f"matrix is singular (rank {len(pivots)} < {n})")
    return QMatrix(R[:, n:])


def nullspace(A: QMatrix, tol: Tolerances | None = None) -> list[QVector]:
    """A basis (over right scalars) of ``{x : A x = 0}``."""
    tol = resolve(tol)
    m, n = A.shape
    R, pivots = rref(A.data, n, rank_threshold(A.data, tol))
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = np.zeros((n, 4))
        x[f, 0] = 1.0
        for r, pc in enumerate(pivots):
            x[pc] = -R[r, f]
        basis.append(QVector(x))
    return basis


def is_complete(vectors: Sequence[QVector], tol: Tolerances | None = None) -> bool:
    """Whether ``vectors`` span H^n, i.e. their column matrix has rank n."""
    vectors = list(vectors)
    if not vectors:
        return False
    X = columns_matrix(vectors)
    return rank(X, tol) == X.shape[0]
