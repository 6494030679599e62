"""Deterministic generators for quaternions, operators and families.

Randomness comes from SplitMix64 (Steele, Lea and Flood), a 64-bit
generator small enough to reimplement bit-exactly anywhere:

    state += 0x9E3779B97F4A7C15                     (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9        (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB        (mod 2**64)
    return z ^ (z >> 31)

A uniform draw in [-1, 1) is ``2 * (next() >> 11) * 2**-53 - 1``. Quaternion
components are drawn in the order x0, x1, x2, x3; matrices are filled
column by column, top to bottom.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .errors import GenerationFailure, InvalidConfig
from .qlinalg import QMatrix, QVector, adjoint, gram_schmidt, hermitian_spectrum, matmul, rank
from .quaternion import Quaternion, hamilton

__all__ = [
    "SplitMix64",
    "Kind",
    "GenConfig",
    "GeneratedFamily",
    "gen_quaternion",
    "gen_vector",
    "gen_matrix",
    "gen_family",
    "random_invertible",
]

_MASK = (1 << 64) - 1
MAX_ATTEMPTS = 100


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """A float in [-1, 1)."""
        return 2.0 * ((self.next_u64() >> 11) * 2.0**-53) - 1.0


class Kind(str, enum.Enum):
    ONB = "ONB"
    RIESZ = "RIESZ"
    FRAME = "FRAME"
    BESSEL_ONLY = "BESSEL_ONLY"
    RANK_DEFICIENT = "RANK_DEFICIENT"
    OVERCOMPLETE = "OVERCOMPLETE"


@dataclass(frozen=True)
class GenConfig:
    seed: int
    dim: int
    count: int
    kind: Kind
    condition_cap: float = 1e6

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            try:
                object.__setattr__(self, "kind", Kind(str(self.kind).upper()))
            except ValueError:
                raise InvalidConfig(f"unknown kind {self.kind!r}") from None
        if not 0 <= int(self.seed) <= _MASK:
            raise InvalidConfig("seed must be a 64-bit unsigned integer")
        if self.dim < 1 or self.count < 1:
            raise InvalidConfig("dim and count must be at least 1")
        if not self.condition_cap >= 1.0:
            raise InvalidConfig("condition_cap must be >= 1")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = self.kind.value
        return d


@dataclass(frozen=True)
class GeneratedFamily:
    config: GenConfig
    vectors: tuple[QVector, ...]
    U: QMatrix | None = None


def gen_quaternion(rng: SplitMix64) -> Quaternion:
    return Quaternion(rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform())


def _draw(rng: SplitMix64, count: int) -> np.ndarray:
    return np.array([rng.uniform() for _ in range(count)], dtype=np.float64)


def gen_vector(rng: SplitMix64, n: int) -> QVector:
    return QVector(_draw(rng, 4 * n).reshape(n, 4))


def gen_matrix(rng: SplitMix64, m: int, n: int) -> QMatrix:
    cols = _draw(rng, 4 * m * n).reshape(n, m, 4)
    return QMatrix(np.transpose(cols, (1, 0, 2)))


def _gen_invertible(rng: SplitMix64, n: int) -> QMatrix:
    for _ in range(MAX_ATTEMPTS):
        U = gen_matrix(rng, n, n)
        if rank(U) == n:
            return U
    raise GenerationFailure(f"no invertible {n}x{n} matrix after {MAX_ATTEMPTS} attempts")


def _condition_ok(U: QMatrix, cap: float) -> bool:
    spectrum = hermitian_spectrum(matmul(adjoint(U), U))
    smin, smax = np.sqrt(max(spectrum.min, 0.0)), np.sqrt(max(spectrum.max, 0.0))
    return smax > 0.0 and smin >= smax / cap


def gen_family(cfg: GenConfig) -> GeneratedFamily:
    """Generate a family of the requested kind; same config, same output."""
    rng = SplitMix64(cfg.seed)
    n, m, kind = cfg.dim, cfg.count, cfg.kind

    if kind is Kind.ONB:
        if m > n:
            raise InvalidConfig(f"an orthonormal family in H^{n} has at most {n} vectors")
        U = _gen_invertible(rng, n)
        return GeneratedFamily(cfg, tuple(gram_schmidt(U.columns()[:m])))

    if kind is Kind.RIESZ:
        if m != n:
            raise InvalidConfig(f"a Riesz basis of H^{n} has exactly {n} vectors")
        for _ in range(MAX_ATTEMPTS):
            U = gen_matrix(rng, n, n)
            if rank(U) == n and _condition_ok(U, cfg.condition_cap):
                return GeneratedFamily(cfg, tuple(U.columns()), U)
        raise GenerationFailure(f"no U with condition number <= {cfg.condition_cap} after {MAX_ATTEMPTS} attempts")

    if kind is Kind.FRAME:
        if m < n:
            raise InvalidConfig(f"a frame of H^{n} needs at least {n} vectors")
        U = _gen_invertible(rng, n)
        extra = [gen_vector(rng, n) for _ in range(m - n)]
        return GeneratedFamily(cfg, tuple(U.columns() + extra))

    if kind is Kind.BESSEL_ONLY:
        if n < 2:
            raise InvalidConfig("every nonzero family spans H^1; BESSEL_ONLY needs dim >= 2")
        r = min(m, n - 1)
        for _ in range(MAX_ATTEMPTS):
            base = gen_matrix(rng, n, r)
            if rank(base) == r:
                break
        else:
            raise GenerationFailure("no independent base family")
        cols = base.columns()
        for _ in range(m - r):
            coeffs = _draw(rng, 4 * r).reshape(r, 4)
            combo = hamilton(base.data, coeffs[None, :, :]).sum(axis=1)
            cols.append(QVector(combo))
        return GeneratedFamily(cfg, tuple(cols))

    if kind is Kind.RANK_DEFICIENT:
        if m < 2:
            raise InvalidConfig("RANK_DEFICIENT needs count >= 2 to duplicate a column")
        cols = gen_matrix(rng, n, m).columns()
        cols[-1] = cols[0]
        return GeneratedFamily(cfg, tuple(cols))

    if kind is Kind.OVERCOMPLETE:
        m_eff = max(m, n + 1)
        cfg_eff = GenConfig(cfg.seed, n, m_eff, kind, cfg.condition_cap)
        return GeneratedFamily(cfg_eff, tuple(gen_matrix(rng, n, m_eff).columns()))

    raise InvalidConfig(f"unknown kind {kind!r}")  # pragma: no cover


def random_invertible(rng: SplitMix64, n: int, cap: float = 1e6) -> QMatrix:
    """A random U with condition number at most ``cap`` (used by tests and the CLI)."""
    for _ in range(MAX_ATTEMPTS):
        U = gen_matrix(rng, n, n)
        if rank(U) == n and _condition_ok(U, cap):
            return U
    raise GenerationFailure("no well-conditioned matrix found")
