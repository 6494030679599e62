"""Finite frames in H^n.

A family ``u_1..u_m`` is a frame when there are ``0 < r1 <= r2`` with
``r1 |u|^2 <= sum_i |<u_i|u>|^2 <= r2 |u|^2`` for every ``u``. The middle
term equals ``<u|S u>`` for the frame operator ``S = T T*``, so the optimal
bounds are the extreme eigenvalues of ``S``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import DimensionMismatch, InvalidInput
from .qlinalg import (
    QMatrix,
    QVector,
    adjoint,
    columns_matrix,
    hermitian_spectrum,
    matmul,
    matvec,
    rank,
)
from .quaternion import Quaternion
from .tolerances import Tolerances, resolve

__all__ = ["FrameSystem", "FrameReport", "synthesis", "analysis", "frame_operator", "analyze"]


@dataclass(frozen=True)
class FrameSystem:
    vectors: tuple[QVector, ...]

    def __init__(self, vectors: Sequence[QVector]):
        vectors = tuple(vectors)
        if not vectors:
            raise InvalidInput("a frame system needs at least one vector")
        n = len(vectors[0])
        for v in vectors:
            if not isinstance(v, QVector):
                raise InvalidInput(f"expected QVector, got {type(v).__name__}")
            if len(v) != n:
                raise DimensionMismatch(f"vectors have different lengths ({len(v)} vs {n})")
        object.__setattr__(self, "vectors", vectors)

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    @property
    def m(self) -> int:
        return len(self.vectors)

    def synthesis_matrix(self) -> QMatrix:
        """T, the n x m matrix with the family as columns."""
        return columns_matrix(self.vectors)

    def analysis_matrix(self) -> QMatrix:
        return adjoint(self.synthesis_matrix())

    def without(self, i: int) -> FrameSystem | None:
        rest = self.vectors[:i] + self.vectors[i + 1 :]
        return FrameSystem(rest) if rest else None


def _as_system(F) -> FrameSystem:
    return F if isinstance(F, FrameSystem) else FrameSystem(F)


def synthesis(F: FrameSystem, coeffs: Sequence) -> QVector:
    """``sum_i u_i q_i`` with the coefficients on the right."""
    F = _as_system(F)
    coeffs = list(coeffs)
    if len(coeffs) != F.m:
        raise DimensionMismatch(f"{len(coeffs)} coefficients for a family of {F.m}")
    q = QVector([Quaternion.coerce(c) for c in coeffs])
    return matvec(F.synthesis_matrix(), q)


def analysis(F: FrameSystem, u: QVector) -> list[Quaternion]:
    """The coefficient sequence ``(<u_i|u>)_i``."""
    F = _as_system(F)
    if len(u) != F.n:
        raise DimensionMismatch(f"vector of length {len(u)} in ambient dimension {F.n}")
    return list(matvec(F.analysis_matrix(), u))


def frame_operator(F: FrameSystem) -> QMatrix:
    """``S u = sum_i u_i <u_i|u>``, i.e. ``T T*``."""
    F = _as_system(F)
    T = F.synthesis_matrix()
    return matmul(T, adjoint(T))


@dataclass(frozen=True)
class FrameReport:
    n: int
    m: int
    is_bessel: bool
    is_frame: bool
    lower_bound: float
    upper_bound: float
    tight: bool
    parseval: bool
    exact: bool
    rank: int
    tolerances: Tolerances = field(default_factory=Tolerances)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "is_bessel": self.is_bessel,
            "is_frame": self.is_frame,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "tight": self.tight,
            "parseval": self.parseval,
            "exact": self.exact,
            "rank": self.rank,
            "tol_eq": self.tolerances.eq,
            "tol_rank": self.tolerances.rank,
            "tol_spec": self.tolerances.spec,
        }


def lower_bound_positive(lam_min: float, lam_max: float, tol: Tolerances) -> bool:
    """Whether a smallest Gram/frame-operator eigenvalue counts as nonzero.

    The test is relative, ``lam_min > tol.rank * lam_max``. Eigenvalues of
    ``T T*`` carry an absolute error of order ``eps * lam_max``, so a cutoff
    on the eigenvalue scale stays well clear of that noise.
    """
    return lam_max > 0.0 and lam_min > tol.rank * lam_max


def analyze(F: FrameSystem, tol: Tolerances | None = None) -> FrameReport:
    tol = resolve(tol)
    F = _as_system(F)
    spectrum = hermitian_spectrum(frame_operator(F), tol)
    r1 = max(spectrum.min, 0.0)
    r2 = max(spectrum.max, 0.0)
    T = F.synthesis_matrix()
    is_frame = lower_bound_positive(spectrum.min, spectrum.max, tol)
    tight = is_frame and abs(r1 - r2) <= tol.spec
    parseval = tight and abs(r1 - 1.0) <= tol.spec and abs(r2 - 1.0) <= tol.spec
    exact = False
    if is_frame:
        exact = True
        for i in range(F.m):
            rest = F.without(i)
            if rest is not None and rank(rest.synthesis_matrix(), tol) == F.n:
                exact = False
                break
    return FrameReport(
        n=F.n,
        m=F.m,
        is_bessel=True,
        is_frame=is_frame,
        lower_bound=r1,
        upper_bound=r2,
        tight=tight,
        parseval=parseval,
        exact=exact,
        rank=rank(T, tol),
        tolerances=tol,
    )
