"""Frames and Riesz bases in finite-dimensional right quaternionic Hilbert spaces."""

from .errors import QFramesError
from .frames import FrameReport, FrameSystem, analysis, analyze, frame_operator, synthesis
from .qlinalg import QMatrix, QVector, inner, norm
from .quaternion import Quaternion
from .riesz import (
    dual_riesz,
    extend_operator,
    is_riesz_basis,
    make_riesz,
    reconstruct,
    riesz_basis_for_span,
    riesz_sequence_bounds,
    subfamily_bounds,
)
from .tolerances import Tolerances

__version__ = "0.1.0"

__all__ = [
    "FrameReport",
    "FrameSystem",
    "QFramesError",
    "QMatrix",
    "QVector",
    "Quaternion",
    "Tolerances",
    "analysis",
    "analyze",
    "dual_riesz",
    "extend_operator",
    "frame_operator",
    "inner",
    "is_riesz_basis",
    "make_riesz",
    "norm",
    "reconstruct",
    "riesz_basis_for_span",
    "riesz_sequence_bounds",
    "subfamily_bounds",
    "synthesis",
]
