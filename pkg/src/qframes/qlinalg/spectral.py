"""Spectra of Hermitian quaternion matrices.

A Hermitian quaternion matrix ``A`` maps to the real symmetric matrix
``embed_real(A)``, whose eigenvalues are those of ``A`` each repeated four
times. The real problem is solved with a cyclic Jacobi method in
round-robin (tournament) ordering: every step rotates ``N/2`` disjoint index
pairs at once, and ``N-1`` steps cover every pair exactly once per sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConvergenceFailure, MultiplicityAnomaly, NotHermitian
from ..tolerances import Tolerances, resolve
from .core import QMatrix, QVector, adjoint, embed_real, is_hermitian, matmul, unembed_vector

__all__ = [
    "Spectrum",
    "jacobi_eigh",
    "embedded_spectrum",
    "hermitian_eigh",
    "hermitian_spectrum",
    "op_norm",
    "JACOBI_REL_TOL",
    "JACOBI_MAX_SWEEPS",
]

JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def _round_robin(N: int) -> list[tuple[np.ndarray, np.ndarray]]:
    players = list(range(N)) + ([-1] if N % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        p, q = [], []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a >= 0 and b >= 0:
                p.append(min(a, b))
                q.append(max(a, b))
        rounds.append((np.array(p, dtype=int), np.array(q, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(S: np.ndarray, rel_tol: float = JACOBI_REL_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a real symmetric matrix.

    Returns ``(values, vectors)`` with values ascending and eigenvectors in
    the columns of ``vectors``. Sweeps stop once the off-diagonal Frobenius
    norm is below ``rel_tol`` times the norm of the diagonal.
    """
    A = np.array(S, dtype=np.float64, copy=True)
    N = A.shape[0]
    if A.shape != (N, N):
        raise ValueError(f"square matrix required, got {A.shape}")
    A = 0.5 * (A + A.T)
    V = np.eye(N)
    J = np.eye(N)
    rounds = _round_robin(N)
    converged = False
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        for _ in range(max_sweeps + 1):
            if _off_norm(A) <= rel_tol * float(np.linalg.norm(np.diag(A))):
                converged = True
                break
            for P, Q in rounds:
                apq = A[P, Q]
                zero = apq == 0.0
                theta = (A[Q, Q] - A[P, P]) / (2.0 * np.where(zero, 1.0, apq))
                # theta = +-inf (negligible apq) gives t = 0, i.e. no rotation
                t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
                t[zero] = 0.0
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # J[p,p] = J[q,q] = c, J[p,q] = s, J[q,p] = -s
                J[P, P] = c
                J[Q, Q] = c
                J[P, Q] = s
                J[Q, P] = -s
                A = J.T @ A @ J
                A[P, Q] = 0.0
                A[Q, P] = 0.0
                V = V @ J
                J[P, P] = 1.0
                J[Q, Q] = 1.0
                J[P, Q] = 0.0
                J[Q, P] = 0.0
    if not converged:
        raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.diag(A).copy()
    order = np.argsort(values, kind="stable")
    return values[order], V[:, order]


@dataclass(frozen=True)
class Spectrum:
    """Distinct eigenvalues (ascending) with their quaternionic multiplicities."""

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]

    @property
    def min(self) -> float:
        return self.eigenvalues[0]

    @property
    def max(self) -> float:
        return self.eigenvalues[-1]

    def expanded(self) -> list[float]:
        """Eigenvalues repeated by multiplicity."""
        out: list[float] = []
        for lam, mult in zip(self.eigenvalues, self.multiplicities):
            out.extend([lam] * mult)
        return out

    def to_dict(self) -> dict:
        return {"eigenvalues": list(self.eigenvalues), "multiplicities": list(self.multiplicities)}


def embedded_spectrum(A: QMatrix, tol: Tolerances | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and eigenvectors of ``embed_real(A)`` for Hermitian ``A``."""
    tol = resolve(tol)
    if not is_hermitian(A, tol):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return jacobi_eigh(embed_real(A))


def _clusters(values: np.ndarray, tol: Tolerances) -> np.ndarray:
    groups = values.reshape(-1, 4)
    spread = groups[:, 3] - groups[:, 0]
    scale = max(1.0, float(np.max(np.abs(values))))
    if np.any(spread > tol.spec * scale):
        raise MultiplicityAnomaly(
            f"eigenvalues of the real embedding do not group by four (max spread {float(np.max(spread)):.3e})"
        )
    return groups.mean(axis=1)


def hermitian_eigh(A: QMatrix, tol: Tolerances | None = None) -> tuple[list[float], list[QVector]]:
    """Right eigenpairs ``A v = v lam`` of a Hermitian matrix, one per quaternionic eigenvalue.

    Each eigenvector is the first real eigenvector of its cluster of four,
    read back as a quaternion vector. Vectors from different clusters are
    orthogonal; inside a repeated eigenvalue they are not guaranteed to be.
    """
    tol = resolve(tol)
    values, vectors = embedded_spectrum(A, tol)
    lams = _clusters(values, tol)
    vecs = [unembed_vector(vectors[:, 4 * k]) for k in range(len(lams))]
    return [float(x) for x in lams], vecs


def hermitian_spectrum(A: QMatrix, tol: Tolerances | None = None) -> Spectrum:
    tol = resolve(tol)
    values, _ = embedded_spectrum(A, tol)
    lams = _clusters(values, tol)
    distinct: list[list[float]] = []
    for lam in lams:
        if distinct and abs(lam - distinct[-1][0]) <= tol.spec:
            distinct[-1].append(float(lam))
        else:
            distinct.append([float(lam)])
    return Spectrum(
        eigenvalues=tuple(math.fsum(g) / len(g) for g in distinct),
        multiplicities=tuple(len(g) for g in distinct),
    )


def op_norm(A: QMatrix, tol: Tolerances | None = None) -> float:
    """Operator 2-norm, the square root of the largest eigenvalue of ``A* A``."""
    lam = hermitian_spectrum(matmul(adjoint(A), A), tol).max
    return math.sqrt(max(lam, 0.0))
