import math

import numpy as np
import pytest

from conftest import e, gen_matrix, gen_quaternion, gen_vector, hermitian
from qframes.errors import DependentInput, DimensionMismatch, MultiplicityAnomaly, NotHermitian, Singular
from qframes.qlinalg import (
    QMatrix,
    QVector,
    adjoint,
    embed_real,
    embedded_spectrum,
    gram,
    gram_schmidt,
    hermitian_eigh,
    hermitian_spectrum,
    inner,
    invert,
    is_complete,
    is_orthonormal,
    jacobi_eigh,
    matmul,
    matvec,
    norm,
    nullspace,
    op_norm,
    orth_complement,
    rank,
    solve,
)
from qframes.quaternion import I, J, K, ONE, ZERO, Quaternion

ROOT5 = math.sqrt(5.0)


# -- inner product and norm ----------------------------------------------------


def test_inner_examples():
    p = QVector([I, J])
    assert inner(p, p) == Quaternion(2.0)
    assert inner(QVector([I]), QVector([J])) == -K
    assert inner(QVector([J]), QVector([I])) == K
    assert inner(p, QVector.zeros(2)) == ZERO
    with pytest.raises(DimensionMismatch):
        inner(p, QVector([I]))


def test_norm_examples(rng):
    assert norm(e(3, 0)) == 1.0
    assert norm(QVector([Quaternion(1, 1), ZERO])) == pytest.approx(math.sqrt(2), abs=1e-15)
    v, q = gen_vector(rng, 4), gen_quaternion(rng)
    assert norm(v * q) == pytest.approx(norm(v) * abs(q), rel=1e-12)


def test_inner_product_axioms(rng):
    for n in range(1, 7):
        for _ in range(20):
            u, v, w = (gen_vector(rng, n) for _ in range(3))
            q = gen_quaternion(rng)
            assert inner(u, v).conj().isclose(inner(v, u), 1e-12)
            assert inner(u, u).real > 0
            assert inner(u, v + w).isclose(inner(u, v) + inner(u, w), 1e-12)
            assert inner(v, u * q).isclose(inner(v, u) * q, 1e-12)
            assert inner(v * q, u).isclose(q.conj() * inner(v, u), 1e-12)
            assert abs(inner(u, v)) ** 2 <= inner(u, u).real * inner(v, v).real + 1e-9
            assert norm(u + v) <= norm(u) + norm(v) + 1e-12


def test_norm_zero_iff_zero():
    assert norm(QVector.zeros(3)) == 0.0
    assert norm(QVector([ZERO, Quaternion(0, 0, 1e-200)])) > 0


# -- matrices ------------------------------------------------------------------


def test_adjoint_examples(rng):
    assert adjoint(QMatrix.identity(3)) == QMatrix.identity(3)
    A = gen_matrix(rng, 3, 2)
    assert adjoint(adjoint(A)) == A
    assert adjoint(QMatrix([[I]])) == QMatrix([[-I]])


def test_adjoint_contract(rng):
    for _ in range(30):
        A = gen_matrix(rng, 3, 4)
        u, v = gen_vector(rng, 4), gen_vector(rng, 3)
        assert inner(v, matvec(A, u)).isclose(inner(matvec(adjoint(A), v), u), 1e-9)


def test_products(rng):
    A, B = gen_matrix(rng, 3, 3), gen_matrix(rng, 3, 2)
    assert matmul(QMatrix.identity(3), A) == A
    assert adjoint(matmul(A, B)).isclose(matmul(adjoint(B), adjoint(A)), 1e-12)
    assert matmul(QMatrix([[I]]), QMatrix([[J]])) == QMatrix([[K]])
    assert (A + A).isclose(A * 2.0, 0.0)
    with pytest.raises(DimensionMismatch):
        matmul(B, B)


def test_right_linearity(rng):
    for _ in range(20):
        A, v, q = gen_matrix(rng, 4, 3), gen_vector(rng, 3), gen_quaternion(rng)
        assert matvec(A, v * q).isclose(matvec(A, v) * q, 1e-12)


def test_serialisation_is_columns():
    A = QMatrix.from_columns([QVector([ONE, I]), QVector([J, K])])
    assert A.to_list() == [[[1, 0, 0, 0], [0, 1, 0, 0]], [[0, 0, 1, 0], [0, 0, 0, 1]]]
    assert QMatrix.from_list(A.to_list()) == A
    assert A[1, 0] == I


# -- elimination ---------------------------------------------------------------


def test_invert_examples():
    assert invert(QMatrix.identity(3) * 2.0) == QMatrix.identity(3) * 0.5
    assert invert(QMatrix([[I]])) == QMatrix([[-I]])
    A = QMatrix.from_columns([e(2, 0), e(2, 0), e(2, 1)])
    assert rank(A) == 2


def test_singular_raises():
    A = QMatrix.from_columns([e(2, 0), e(2, 0)])
    with pytest.raises(Singular):
        invert(A)
    with pytest.raises(Singular):
        solve(A, e(2, 1))
    with pytest.raises(DimensionMismatch):
        invert(QMatrix.zeros(2, 3))


def test_invert_against_embedding_oracle(rng):
    for n in range(1, 6):
        for _ in range(10):
            A = gen_matrix(rng, n, n)
            Ainv = invert(A)
            assert matmul(A, Ainv).max_abs_diff(QMatrix.identity(n)) <= 1e-8
            assert np.allclose(embed_real(Ainv), np.linalg.inv(embed_real(A)), atol=1e-8)
            b = gen_vector(rng, n)
            assert matvec(A, solve(A, b)).isclose(b, 1e-9)


def test_rank_against_embedding_oracle(rng):
    for n in range(1, 6):
        for k in range(1, n + 2):
            base = gen_matrix(rng, n, k)
            cols = base.columns()
            if k > 1:
                cols[-1] = matvec(QMatrix.from_columns(cols[:-1]), gen_vector(rng, k - 1))
            A = QMatrix.from_columns(cols)
            real_rank = np.linalg.matrix_rank(embed_real(A), tol=1e-8)
            assert real_rank % 4 == 0
            assert rank(A) == real_rank // 4


def test_nullspace_and_complement(rng):
    A = gen_matrix(rng, 2, 4)
    null = nullspace(A)
    assert len(null) == 2
    for x in null:
        assert norm(matvec(A, x)) <= 1e-9
    S = [gen_vector(rng, 4), gen_vector(rng, 4)]
    comp = orth_complement(S)
    assert len(comp) == 2 and is_orthonormal(comp)
    for v in comp:
        for u in S:
            assert abs(inner(v, u)) <= 1e-9
    assert orth_complement([e(2, 0), e(2, 1)]) == []
    assert len(orth_complement([], n=3)) == 3


def test_is_complete():
    assert is_complete([e(2, 0), e(2, 0) + e(2, 1)])
    assert not is_complete([e(2, 0), e(2, 0)])
    assert not is_complete([e(3, 0)])


# -- Gram-Schmidt --------------------------------------------------------------


def test_gram_schmidt_examples():
    assert gram_schmidt([e(2, 0), e(2, 1)]) == [e(2, 0), e(2, 1)]
    assert gram_schmidt([QVector.from_real([2, 0])]) == [e(2, 0)]
    out = gram_schmidt([QVector.from_real([1, 0]), QVector.from_real([1, 1])])
    assert out[0].isclose(e(2, 0), 1e-15) and out[1].isclose(e(2, 1), 1e-15)
    with pytest.raises(DependentInput):
        gram_schmidt([e(2, 0), e(2, 0) * J])


def test_gram_schmidt_parseval(rng):
    for n in range(2, 7):
        N = gram_schmidt(gen_matrix(rng, n, n).columns())
        assert is_orthonormal(N)
        u = gen_vector(rng, n)
        coeffs = [inner(z, u) for z in N]
        assert abs(norm(u) ** 2 - sum(abs(c) ** 2 for c in coeffs)) <= 1e-9
        expansion = QVector.zeros(n)
        for z, c in zip(N, coeffs):
            expansion = expansion + z * c
        assert norm(expansion - u) <= 1e-9


def test_gram_schmidt_keeps_span(rng):
    vs = gen_matrix(rng, 5, 3).columns()
    Q = gram_schmidt(vs)
    both = QMatrix.from_columns(vs + Q)
    assert rank(both) == 3


# -- embedding and spectra -----------------------------------------------------


def test_embed_examples():
    assert np.array_equal(embed_real(QMatrix.zeros(1)), np.zeros((4, 4)))
    assert np.array_equal(embed_real(QMatrix([[ONE]])), np.eye(4))
    ij = embed_real(QMatrix([[I]])) @ embed_real(QMatrix([[J]]))
    assert np.array_equal(ij, embed_real(QMatrix([[K]])))


def test_embed_homomorphism(rng):
    for _ in range(20):
        A, B = gen_matrix(rng, 3, 2), gen_matrix(rng, 2, 4)
        assert np.max(np.abs(embed_real(matmul(A, B)) - embed_real(A) @ embed_real(B))) <= 1e-12
        assert np.array_equal(embed_real(adjoint(A)), embed_real(A).T)


def test_jacobi_against_numpy(np_rng):
    for N in (1, 2, 5, 8, 17):
        M = np_rng.standard_normal((N, N))
        M = M + M.T
        w, V = jacobi_eigh(M)
        assert np.allclose(w, np.linalg.eigvalsh(M), atol=1e-10)
        assert np.allclose(M @ V, V * w, atol=1e-10)
        assert np.allclose(V.T @ V, np.eye(N), atol=1e-12)


def test_spectrum_examples():
    s = hermitian_spectrum(QMatrix.diag([2, 1]))
    assert s.eigenvalues == pytest.approx((1, 2), abs=1e-12)
    assert s.multiplicities == (1, 1)
    s = hermitian_spectrum(QMatrix.identity(4))
    assert s.eigenvalues == pytest.approx((1,), abs=1e-12)
    assert s.multiplicities == (4,)
    s = hermitian_spectrum(gram([e(2, 0), e(2, 0) + e(2, 1)]))
    assert s.eigenvalues == pytest.approx(((3 - ROOT5) / 2, (3 + ROOT5) / 2), abs=1e-12)


def test_spectrum_against_numpy(rng):
    for n in range(1, 7):
        A = hermitian(rng, n)
        values, _ = embedded_spectrum(A)
        ref = np.linalg.eigvalsh(embed_real(A))
        assert np.allclose(values, ref, atol=1e-10)
        assert np.allclose(hermitian_spectrum(A).expanded(), ref[::4], atol=1e-9)


def test_hermitian_eigenvectors(rng):
    A = hermitian(rng, 4)
    lams, vecs = hermitian_eigh(A)
    for lam, v in zip(lams, vecs):
        assert matvec(A, v).isclose(v * lam, 1e-9)
        assert norm(v) == pytest.approx(1.0, abs=1e-12)


def test_spectrum_errors(rng):
    with pytest.raises(NotHermitian):
        hermitian_spectrum(QMatrix([[I]]))
    with pytest.raises(NotHermitian):
        hermitian_spectrum(gen_matrix(rng, 3, 3))


def test_multiplicity_anomaly_detection():
    from qframes.qlinalg.spectral import _clusters
    from qframes.tolerances import Tolerances

    with pytest.raises(MultiplicityAnomaly):
        _clusters(np.array([0.0, 0.0, 0.0, 1.0, 2.0, 2.0, 2.0, 2.0]), Tolerances())


def test_op_norm(rng):
    assert op_norm(QMatrix.identity(3) * 2.0) == pytest.approx(2.0, abs=1e-12)
    assert op_norm(QMatrix.diag([1, 3])) == pytest.approx(3.0, abs=1e-12)
    for _ in range(20):
        U, v = gen_matrix(rng, 4, 3), gen_vector(rng, 3)
        assert op_norm(U) >= norm(matvec(U, v)) / norm(v) - 1e-12
        assert op_norm(U) == pytest.approx(np.linalg.norm(embed_real(U), 2), rel=1e-10)
