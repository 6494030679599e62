"""Arithmetic of the real quaternions.

A quaternion ``x0 + x1 i + x2 j + x3 k`` is stored as four float64
components. Multiplication follows Hamilton's rules ``i^2 = j^2 = k^2 = -1``,
``ij = k``, ``jk = i``, ``ki = j`` and is not commutative.

Besides the scalar :class:`Quaternion` type this module holds the vectorised
kernels (:func:`hamilton`, :func:`conj_array`, ...) used by the matrix code,
which work on numpy arrays whose last axis has length 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import InvalidInput, ZeroDivisor
from .tolerances import EQ_TOL

__all__ = [
    "Quaternion",
    "mul",
    "conj",
    "modulus",
    "inverse",
    "add",
    "sub",
    "neg",
    "scale",
    "real_part",
    "imag_part",
    "hamilton",
    "conj_array",
    "modulus_array",
    "inverse_array",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
]


@dataclass(frozen=True)
class Quaternion:
    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            value = getattr(self, name)
            if not isinstance(value, (Real, np.floating, np.integer)) or isinstance(value, bool):
                raise InvalidInput(f"quaternion component {name} must be real, got {value!r}")
            value = float(value)
            if not math.isfinite(value):
                raise InvalidInput(f"quaternion component {name} is not finite: {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_array(cls, a) -> Quaternion:
        a = np.asarray(a, dtype=float)
        if a.shape != (4,):
            raise InvalidInput(f"expected 4 components, got shape {a.shape}")
        return cls(*(float(x) for x in a))

    @classmethod
    def coerce(cls, value) -> Quaternion:
        """Accept a Quaternion, a real number or a 4-sequence."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (Real, np.floating, np.integer)) and not isinstance(value, bool):
            return cls(float(value))
        return cls.from_array(value)

    def to_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3])

    def to_list(self) -> list[float]:
        return [self.x0, self.x1, self.x2, self.x3]

    @property
    def real(self) -> float:
        return self.x0

    @property
    def imag(self) -> Quaternion:
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    def conj(self) -> Quaternion:
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm2(self) -> float:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def inverse(self) -> Quaternion:
        n2 = self.norm2()
        if n2 == 0.0:
            raise ZeroDivisor("the zero quaternion has no inverse")
        return Quaternion(self.x0 / n2, -self.x1 / n2, -self.x2 / n2, -self.x3 / n2)

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        a0, a1, a2, a3 = self.x0, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = other.x0, other.x1, other.x2, other.x3
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        # right division: self * other^{-1}
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def isclose(self, other, tol: float = EQ_TOL) -> bool:
        other = Quaternion.coerce(other)
        return (
            abs(self.x0 - other.x0) <= tol
            and abs(self.x1 - other.x1) <= tol
            and abs(self.x2 - other.x2) <= tol
            and abs(self.x3 - other.x3) <= tol
        )

    def __repr__(self) -> str:
        return f"Quaternion({self.x0!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self) -> str:
        return f"{self.x0:g}{self.x1:+g}i{self.x2:+g}j{self.x3:+g}k"


def _maybe(value) -> Quaternion | None:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (Real, np.floating, np.integer)) and not isinstance(value, bool):
        return Quaternion(float(value))
    return None


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)  # noqa: E741
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def modulus(q: Quaternion) -> float:
    return abs(q)


def inverse(q: Quaternion) -> Quaternion:
    """``conj(q) / |q|^2``; raises :class:`ZeroDivisor` for ``q = 0``."""
    return q.inverse()


def add(p: Quaternion, q: Quaternion) -> Quaternion:
    return p + q


def sub(p: Quaternion, q: Quaternion) -> Quaternion:
    return p - q


def neg(q: Quaternion) -> Quaternion:
    return -q


def scale(q: Quaternion, r: float) -> Quaternion:
    return Quaternion(q.x0 * r, q.x1 * r, q.x2 * r, q.x3 * r)


def real_part(q: Quaternion) -> float:
    return q.x0


def imag_part(q: Quaternion) -> Quaternion:
    return q.imag


# -- array kernels ---------------------------------------------------------


def hamilton(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays of shape (..., 4)."""
    a0, a1, a2, a3 = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    b0, b1, b2, b3 = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def conj_array(a: np.ndarray) -> np.ndarray:
    return a * _CONJ_SIGNS


def modulus_array(a: np.ndarray) -> np.ndarray:
    return np.sqrt(np.sum(a * a, axis=-1))


def inverse_array(a: np.ndarray) -> np.ndarray:
    n2 = np.sum(a * a, axis=-1)
    if np.any(n2 == 0.0):
        raise ZeroDivisor("the zero quaternion has no inverse")
    return conj_array(a) / n2[..., None]
