"""Numerical tolerances used by equality, rank and spectral decisions."""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace

EQ_TOL = 1e-9
RANK_TOL = 1e-8
SPEC_TOL = 1e-7


@dataclass(frozen=True)
class Tolerances:
    """The three knobs every report echoes.

    ``eq`` is an absolute componentwise tolerance. ``rank`` is relative: a
    pivot (or singular value) counts as nonzero when it exceeds
    ``rank * max |entry|`` of the matrix under test. ``spec`` is the absolute
    tolerance for comparing eigenvalues.
    """

    eq: float = EQ_TOL
    rank: float = RANK_TOL
    spec: float = SPEC_TOL

    def __post_init__(self):
        for name in ("eq", "rank", "spec"):
            value = getattr(self, name)
            if not value > 0 or value != value or value == float("inf"):
                raise ValueError(f"tolerance {name} must be positive and finite, got {value!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    def override(self, eq=None, rank=None, spec=None) -> Tolerances:
        changes = {k: v for k, v in (("eq", eq), ("rank", rank), ("spec", spec)) if v is not None}
        return replace(self, **changes)


DEFAULT = Tolerances()


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT if tol is None else tol
