"""Riesz bases, their duals, and Riesz sequences in H^n.

A Riesz basis is the image ``U(N)`` of an orthonormal basis ``N`` under an
invertible right-linear ``U``. Its dual is ``(U^-1)* N``; the two families
are biorthogonal and each reconstructs every vector through the other.
A family is a Riesz sequence when the Gram quadratic form
``|sum_n x_n q_n|^2 = sum_ij conj(q_i) G_ij q_j`` is bounded above and below
by multiples of ``sum |q_n|^2``; the optimal constants are the extreme
eigenvalues of the Gram matrix ``G``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    DualMismatch,
    EmptyFamily,
    InconsistentVerdict,
    InvalidInput,
    LowerBoundZero,
    NotComplete,
    NotOrthonormal,
    NotRieszBasis,
    Singular,
)
from .frames import frame_operator, lower_bound_positive
from .qlinalg import (
    QMatrix,
    QVector,
    adjoint,
    columns_matrix,
    gram,
    gram_schmidt,
    hermitian_eigh,
    invert,
    is_complete,
    is_orthonormal,
    matmul,
    matvec,
    norm,
    op_norm,
    rank,
    rref,
)
from .qlinalg.elimination import rank_threshold
from .tolerances import Tolerances, resolve

__all__ = [
    "NOT_COMPLETE",
    "LOWER_BOUND_ZERO",
    "NOT_INVERTIBLE",
    "RieszCertificate",
    "RieszSequenceBounds",
    "RieszVerdict",
    "ExtensionReport",
    "SpanVerdict",
    "make_riesz",
    "dual_riesz",
    "reconstruct",
    "reconstruction_residuals",
    "riesz_sequence_bounds",
    "is_riesz_basis",
    "extend_operator",
    "subfamily_bounds",
    "riesz_basis_for_span",
]

NOT_COMPLETE = "NOT_COMPLETE"
LOWER_BOUND_ZERO = "LOWER_BOUND_ZERO"
NOT_INVERTIBLE = "NOT_INVERTIBLE"

# most informative first: a singular Gram explains the other two failures
_TAG_ORDER = (LOWER_BOUND_ZERO, NOT_COMPLETE, NOT_INVERTIBLE)


def _vectors(X) -> list[QVector]:
    X = list(X)
    if not X:
        raise EmptyFamily("empty family")
    n = len(X[0])
    for x in X:
        if len(x) != n:
            raise DimensionMismatch("vectors have different lengths")
    return X


def _cols(M: QMatrix) -> list[QVector]:
    return M.columns()


@dataclass(frozen=True)
class RieszCertificate:
    U: QMatrix
    N: tuple[QVector, ...]
    X: tuple[QVector, ...]
    Y: tuple[QVector, ...]
    lower: float
    upper: float
    tolerances: Tolerances = field(default_factory=Tolerances)

    def biorthogonality_error(self) -> float:
        """``max_ij |<x_i|y_j> - delta_ij|`` over all components."""
        M = matmul(adjoint(columns_matrix(self.X)), columns_matrix(self.Y))
        return M.max_abs_diff(QMatrix.identity(len(self.X)))

    def to_dict(self) -> dict:
        return {
            "U": self.U.to_list(),
            "N": [z.to_list() for z in self.N],
            "X": [x.to_list() for x in self.X],
            "Y": [y.to_list() for y in self.Y],
            "A": self.lower,
            "B": self.upper,
            "tolerances": self.tolerances.to_dict(),
        }


def make_riesz(U: QMatrix, N: Sequence[QVector] | None = None, tol: Tolerances | None = None) -> RieszCertificate:
    """Build the Riesz basis ``X = U(N)`` with its dual ``Y = (U^-1)* N``.

    The bounds are ``A = 1/|U^-1|^2`` and ``B = |U|^2``. ``N`` defaults to the
    standard basis.
    """
    tol = resolve(tol)
    n, k = U.shape
    if n != k:
        raise DimensionMismatch(f"U must be square, got {U.shape}")
    if N is None:
        N = [QVector.basis(n, i) for i in range(n)]
    N = list(N)
    if len(N) != n or any(len(z) != n for z in N) or not is_orthonormal(N, tol):
        raise NotOrthonormal("N is not an orthonormal basis of H^n")
    U_inv = invert(U, tol)
    dual_op = adjoint(U_inv)
    X = tuple(matvec(U, z) for z in N)
    Y = tuple(matvec(dual_op, z) for z in N)
    lower = 1.0 / op_norm(U_inv, tol) ** 2
    upper = op_norm(U, tol) ** 2
    return RieszCertificate(U=U, N=tuple(N), X=X, Y=Y, lower=lower, upper=upper, tolerances=tol)


@dataclass(frozen=True)
class RieszSequenceBounds:
    A: float
    B: float
    gram: QMatrix
    is_riesz_sequence: bool
    null_direction: QVector | None = None

    def to_dict(self) -> dict:
        return {
            "A": self.A,
            "B": self.B,
            "is_riesz_sequence": self.is_riesz_sequence,
            "null_direction": None if self.null_direction is None else self.null_direction.to_list(),
        }


def riesz_sequence_bounds(X: Sequence[QVector], tol: Tolerances | None = None) -> RieszSequenceBounds:
    """Optimal ``A``, ``B`` with ``A sum|q|^2 <= |sum x_n q_n|^2 <= B sum|q|^2``.

    When the lower bound vanishes, ``null_direction`` holds a unit coefficient
    vector q with ``sum x_n q_n`` (numerically) zero.
    """
    tol = resolve(tol)
    X = _vectors(X)
    G = gram(X)
    lams, vecs = hermitian_eigh(G, tol)
    positive = lower_bound_positive(lams[0], lams[-1], tol)
    return RieszSequenceBounds(
        A=max(lams[0], 0.0),
        B=max(lams[-1], 0.0),
        gram=G,
        is_riesz_sequence=positive,
        null_direction=None if positive else vecs[0],
    )


def subfamily_bounds(X: Sequence[QVector], idx, tol: Tolerances | None = None) -> RieszSequenceBounds:
    """Riesz-sequence bounds of ``[X[i] for i in idx]``.

    For a Riesz sequence the result is again one, with ``A_sub >= A`` and
    ``B_sub <= B`` (Cauchy interlacing for principal Gram submatrices).
    """
    X = _vectors(X)
    idx = list(idx)
    if not idx:
        raise EmptyFamily("empty index set")
    if len(set(idx)) != len(idx) or any(not 0 <= i < len(X) for i in idx):
        raise InvalidInput(f"invalid index set {idx} for a family of {len(X)}")
    return riesz_sequence_bounds([X[i] for i in idx], tol)


@dataclass(frozen=True)
class RieszVerdict:
    """Outcome of :func:`is_riesz_basis`, success or counterexample."""

    is_riesz_basis: bool
    complete: bool
    lower_bound_positive: bool
    invertible: bool
    failures: tuple[str, ...]
    bounds: RieszSequenceBounds
    certificate: RieszCertificate | None
    tolerances: Tolerances

    @property
    def tag(self) -> str | None:
        return self.failures[0] if self.failures else None

    @property
    def via_gram(self) -> bool:
        return self.complete and self.lower_bound_positive

    @property
    def via_operator(self) -> bool:
        return self.invertible

    def __bool__(self) -> bool:
        return self.is_riesz_basis

    def to_dict(self) -> dict:
        out = {
            "riesz_basis": self.is_riesz_basis,
            "complete": self.complete,
            "lower_bound_positive": self.lower_bound_positive,
            "invertible": self.invertible,
            "gram_A": self.bounds.A,
            "gram_B": self.bounds.B,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        else:
            out["tag"] = self.tag
            out["failures"] = list(self.failures)
            if self.bounds.null_direction is not None:
                out["null_direction"] = self.bounds.null_direction.to_list()
        out["tolerances"] = self.tolerances.to_dict()
        return out


def is_riesz_basis(X: Sequence[QVector], tol: Tolerances | None = None) -> RieszVerdict:
    """Decide whether ``X`` is a Riesz basis of H^n along two independent routes.

    Route one: ``X`` is complete (rank n) and its Gram matrix has a positive
    smallest eigenvalue. Route two: the column matrix of ``X`` is square and
    invertible, so ``X = U(standard basis)``. The routes must agree;
    disagreement raises :class:`InconsistentVerdict`.
    """
    tol = resolve(tol)
    X = _vectors(X)
    n, m = len(X[0]), len(X)
    U = columns_matrix(X)

    complete = rank(U, tol) == n
    bounds = riesz_sequence_bounds(X, tol)

    certificate = None
    invertible = False
    if m == n:
        try:
            certificate = make_riesz(U, tol=tol)
            invertible = True
        except Singular:
            pass

    via_gram = complete and bounds.is_riesz_sequence
    if via_gram != invertible:
        raise InconsistentVerdict(
            f"complete={complete}, gram lower bound positive={bounds.is_riesz_sequence}, invertible={invertible}"
        )
    failed = {
        NOT_COMPLETE: not complete,
        LOWER_BOUND_ZERO: not bounds.is_riesz_sequence,
        NOT_INVERTIBLE: not invertible,
    }
    failures = tuple(tag for tag in _TAG_ORDER if failed[tag])
    return RieszVerdict(
        is_riesz_basis=invertible,
        complete=complete,
        lower_bound_positive=bounds.is_riesz_sequence,
        invertible=invertible,
        failures=failures,
        bounds=bounds,
        certificate=certificate,
        tolerances=tol,
    )


def dual_riesz(X: Sequence[QVector], tol: Tolerances | None = None, check_tol: float = 1e-8) -> list[QVector]:
    """The unique ``Y`` with ``u = sum_n x_n <y_n|u>`` for every u.

    Computed as the columns of ``(U*)^-1`` and cross-checked against the
    canonical dual ``S^-1 x_n`` with ``S`` the frame operator. A mismatch
    beyond ``check_tol`` (relative to the largest entry) raises
    :class:`DualMismatch`.
    """
    tol = resolve(tol)
    X = _vectors(X)
    verdict = is_riesz_basis(X, tol)
    if not verdict:
        raise NotRieszBasis(f"family is not a Riesz basis ({', '.join(verdict.failures)})")
    U = columns_matrix(X)
    Y = invert(adjoint(U), tol)
    canonical = matmul(invert(frame_operator(X), tol), U)
    scale = max(1.0, Y.max_modulus())
    diff = Y.max_abs_diff(canonical)
    if diff > check_tol * scale:
        raise DualMismatch(f"(U*)^-1 and S^-1 X differ by {diff:.3e}")
    return _cols(Y)


def reconstruct(X: Sequence[QVector], Y: Sequence[QVector], u: QVector) -> tuple[QVector, QVector]:
    """``(sum_n x_n <y_n|u>, sum_n y_n <x_n|u>)``."""
    X, Y = _vectors(X), _vectors(Y)
    if len(X) != len(Y):
        raise DimensionMismatch(f"families have different sizes ({len(X)} vs {len(Y)})")
    if len(X[0]) != len(Y[0]) or len(u) != len(X[0]):
        raise DimensionMismatch("ambient dimensions disagree")
    TX, TY = columns_matrix(X), columns_matrix(Y)
    via_x = matvec(TX, matvec(adjoint(TY), u))
    via_y = matvec(TY, matvec(adjoint(TX), u))
    return via_x, via_y


def reconstruction_residuals(X, Y, u: QVector) -> tuple[float, float]:
    a, b = reconstruct(X, Y, u)
    return norm(a - u), norm(b - u)


@dataclass(frozen=True)
class ExtensionReport:
    W: QMatrix
    norm: float
    A: float
    B: float
    bound: float
    within_bound: bool

    def to_dict(self) -> dict:
        return {
            "W": self.W.to_list(),
            "norm": self.norm,
            "A": self.A,
            "B": self.B,
            "bound": self.bound,
            "within_bound": self.within_bound,
        }


def extend_operator(X: Sequence[QVector], Y: Sequence[QVector], tol: Tolerances | None = None) -> ExtensionReport:
    """The right-linear ``W`` with ``W x_n = y_n``, and the check ``|W| <= sqrt(B/A)``.

    ``A`` is the Riesz-sequence lower bound of ``X`` and ``B`` the Bessel bound
    (largest Gram eigenvalue) of ``Y``. The ``y_n`` may live in a different
    dimension from the ``x_n``.
    """
    tol = resolve(tol)
    X, Y = _vectors(X), _vectors(Y)
    if len(X) != len(Y):
        raise DimensionMismatch(f"families have different sizes ({len(X)} vs {len(Y)})")
    if not is_complete(X, tol):
        raise NotComplete("X does not span H^n")
    bx = riesz_sequence_bounds(X, tol)
    if not bx.is_riesz_sequence:
        raise LowerBoundZero("X has no positive lower Riesz bound")
    by = riesz_sequence_bounds(Y, tol)
    W = matmul(columns_matrix(Y), invert(columns_matrix(X), tol))
    w_norm = op_norm(W, tol)
    bound = math.sqrt(by.B / bx.A)
    return ExtensionReport(
        W=W, norm=w_norm, A=bx.A, B=by.B, bound=bound, within_bound=w_norm <= bound + tol.spec
    )


@dataclass(frozen=True)
class SpanVerdict:
    basis: tuple[QVector, ...]
    coordinates: tuple[QVector, ...]
    verdict: RieszVerdict

    def __bool__(self) -> bool:
        return bool(self.verdict)


def riesz_basis_for_span(X: Sequence[QVector], tol: Tolerances | None = None) -> SpanVerdict:
    """Test ``X`` as a Riesz basis of its own span.

    An orthonormal basis Q of span(X) is built from a maximal independent
    subfamily; each ``x_n`` is replaced by its coordinates ``Q* x_n`` and the
    reduced family goes through :func:`is_riesz_basis`.
    """
    tol = resolve(tol)
    X = _vectors(X)
    T = columns_matrix(X)
    _, pivots = rref(T.data, T.shape[1], rank_threshold(T.data, tol))
    if not pivots:
        raise LowerBoundZero("family spans the zero subspace")
    Q = gram_schmidt([X[p] for p in pivots], tol)
    QH = adjoint(columns_matrix(Q))
    coords = [matvec(QH, x) for x in X]
    return SpanVerdict(basis=tuple(Q), coordinates=tuple(coords), verdict=is_riesz_basis(coords, tol))
