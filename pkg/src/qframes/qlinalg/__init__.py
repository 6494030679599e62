"""Linear algebra over the quaternions: right H-module vectors, left-acting matrices."""

from .core import (
    QMatrix,
    QVector,
    add,
    adjoint,
    columns_matrix,
    embed_real,
    gram,
    inner,
    is_hermitian,
    matmul,
    matvec,
    norm,
    unembed_vector,
)
from .elimination import invert, is_complete, nullspace, rank, rank_threshold, rref, solve
from .ortho import gram_schmidt, is_orthonormal, orth_complement
from .spectral import (
    Spectrum,
    embedded_spectrum,
    hermitian_eigh,
    hermitian_spectrum,
    jacobi_eigh,
    op_norm,
)

__all__ = [
    "QMatrix",
    "QVector",
    "Spectrum",
    "add",
    "adjoint",
    "columns_matrix",
    "embed_real",
    "embedded_spectrum",
    "gram",
    "gram_schmidt",
    "hermitian_eigh",
    "hermitian_spectrum",
    "inner",
    "invert",
    "is_complete",
    "is_hermitian",
    "is_orthonormal",
    "jacobi_eigh",
    "matmul",
    "matvec",
    "norm",
    "nullspace",
    "op_norm",
    "orth_complement",
    "rank",
    "rank_threshold",
    "rref",
    "solve",
    "unembed_vector",
]
