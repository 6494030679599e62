"""Orthonormalisation and orthogonal complements."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..errors import DependentInput, DimensionMismatch, InvalidInput
from ..quaternion import conj_array, hamilton, modulus_array
from ..tolerances import Tolerances, resolve
from .core import QMatrix, QVector, adjoint, columns_matrix, gram
from .elimination import nullspace

__all__ = ["gram_schmidt", "orth_complement", "is_orthonormal"]


def _coeffs(Z: np.ndarray, v: np.ndarray) -> np.ndarray:
    # <z_k|v> for every row z_k of Z (k, n, 4) -> (k, 4)
    return np.sum(hamilton(conj_array(Z), v[None, :, :]), axis=1)


def gram_schmidt(vectors: Sequence[QVector], tol: Tolerances | None = None) -> list[QVector]:
    """Orthonormalise ``vectors`` (modified Gram-Schmidt, one re-orthogonalisation pass).

    The component of ``v`` along a unit vector ``z`` is ``z <z|v>``, with the
    coefficient on the right so that the span over right scalars is kept.
    Raises :class:`DependentInput` when a residual is below the rank cutoff.
    """
    tol = resolve(tol)
    vectors = list(vectors)
    if not vectors:
        raise InvalidInput("gram_schmidt needs at least one vector")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors have different lengths")
    scale = max(float(np.max(modulus_array(v.data))) for v in vectors)
    cutoff = tol.rank * scale
    basis: list[np.ndarray] = []
    for idx, v in enumerate(vectors):
        w = np.array(v.data, copy=True)
        for _ in range(2):
            for z in basis:
                w = w - hamilton(z, _coeffs(z[None], w)[0][None, :])
        r = float(np.sqrt(np.sum(w * w)))
        if r <= cutoff:
            raise DependentInput(f"vector {idx} is dependent on its predecessors (residual {r:.3e})")
        basis.append(w / r)
    return [QVector(z) for z in basis]


def is_orthonormal(vectors: Sequence[QVector], tol: Tolerances | None = None) -> bool:
    """The delta check ``<z_i|z_j> = delta_ij`` entrywise within ``tol.eq``."""
    tol = resolve(tol)
    vectors = list(vectors)
    if not vectors:
        return False
    G = gram(vectors)
    return G.isclose(QMatrix.identity(len(vectors)), tol.eq)


def orth_complement(S: Sequence[QVector], n: int | None = None, tol: Tolerances | None = None) -> list[QVector]:
    """Orthonormal basis of ``{v : <v|u> = 0 for all u in S}``.

    ``<v|u> = 0`` for every column u of X is ``X* v = 0``, so this is the
    null space of the adjoint, orthonormalised. An empty ``S`` needs ``n``.
    """
    S = list(S)
    if not S:
        if n is None:
            raise InvalidInput("ambient dimension required for an empty set")
        return [QVector.basis(n, i) for i in range(n)]
    if n is not None and len(S[0]) != n:
        raise DimensionMismatch(f"vectors have length {len(S[0])}, expected {n}")
    null = nullspace(adjoint(columns_matrix(S)), tol)
    if not null:
        return []
    return gram_schmidt(null, tol)
