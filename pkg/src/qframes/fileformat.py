"""JSON family files.

A quaternion is the 4-array ``[x0, x1, x2, x3]``; a vector is an array of
quaternions; a matrix is an array of its columns. A family file looks like::

    {
      "version": "1",
      "n": 2,
      "m": 3,
      "tolerances": {"eq": 1e-09},        # optional overrides
      "gen": {...},                       # optional generator header
      "vectors": [[[1, 0, 0, 0], [0, 0, 0, 0]], ...],
      "U": [...]                          # optional operator, array of columns
    }
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DimensionMismatch, QFramesError
from .qlinalg import QMatrix, QVector
from .tolerances import Tolerances

__all__ = ["FORMAT_VERSION", "ParseError", "FamilyFile", "loads", "load", "dumps", "parse_signal", "to_json"]

FORMAT_VERSION = "1"


class ParseError(QFramesError, ValueError):
    pass


def _reject_constant(name):
    raise ParseError(f"non-finite number {name} in input")


def _load_json(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None


def to_json(obj) -> str:
    """Canonical serialisation: two-space indent, insertion order, trailing newline."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _quaternion(x, where: str) -> list[float]:
    if not isinstance(x, list) or len(x) != 4:
        raise ParseError(f"{where}: a quaternion must be an array of 4 numbers")
    out = []
    for c in x:
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise ParseError(f"{where}: quaternion components must be numbers")
        if not math.isfinite(c):
            raise ParseError(f"{where}: non-finite component")
        out.append(float(c))
    return out


def _vector(col, where: str) -> QVector:
    if not isinstance(col, list) or not col:
        raise ParseError(f"{where}: a vector must be a non-empty array of quaternions")
    return QVector.from_list([_quaternion(x, f"{where}[{i}]") for i, x in enumerate(col)])


def _columns(cols, where: str) -> list[QVector]:
    if not isinstance(cols, list) or not cols:
        raise ParseError(f"{where}: expected a non-empty array of columns")
    return [_vector(c, f"{where}[{j}]") for j, c in enumerate(cols)]


@dataclass
class FamilyFile:
    n: int
    vectors: list[QVector]
    U: QMatrix | None = None
    tolerances: dict = field(default_factory=dict)
    gen: dict | None = None

    @property
    def m(self) -> int:
        return len(self.vectors)

    def resolved_tolerances(self, base: Tolerances | None = None) -> Tolerances:
        base = base or Tolerances()
        return base.override(**{k: self.tolerances.get(k) for k in ("eq", "rank", "spec")})

    def to_dict(self) -> dict:
        out: dict = {"version": FORMAT_VERSION, "n": self.n, "m": self.m}
        if self.tolerances:
            out["tolerances"] = dict(self.tolerances)
        if self.gen is not None:
            out["gen"] = dict(self.gen)
        out["vectors"] = [v.to_list() for v in self.vectors]
        if self.U is not None:
            out["U"] = self.U.to_list()
        return out


def loads(text: str) -> FamilyFile:
    """Parse a family file. Schema problems raise :class:`ParseError`;
    vectors of the wrong length raise :class:`DimensionMismatch`."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}, expected {FORMAT_VERSION!r}")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    vectors = _columns(doc.get("vectors"), "vectors")
    for j, v in enumerate(vectors):
        if len(v) != n:
            raise DimensionMismatch(f"vectors[{j}] has length {len(v)}, expected n = {n}")
    if "m" in doc and doc["m"] != len(vectors):
        raise DimensionMismatch(f"'m' is {doc['m']} but {len(vectors)} vectors were given")
    U = None
    if "U" in doc:
        ucols = _columns(doc["U"], "U")
        if any(len(c) != n for c in ucols):
            raise DimensionMismatch("U columns must have length n")
        U = QMatrix.from_columns(ucols)
    tolerances = doc.get("tolerances", {})
    if not isinstance(tolerances, dict) or any(
        k not in ("eq", "rank", "spec") or isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0
        for k, v in tolerances.items()
    ):
        raise ParseError("'tolerances' must map eq/rank/spec to positive numbers")
    gen = doc.get("gen")
    if gen is not None and not isinstance(gen, dict):
        raise ParseError("'gen' must be an object")
    return FamilyFile(n=n, vectors=vectors, U=U, tolerances=dict(tolerances), gen=gen)


def load(path) -> FamilyFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def dumps(family: FamilyFile) -> str:
    return to_json(family.to_dict())


def parse_signal(text: str, n: int) -> QVector:
    """A signal is a bare array of quaternions or ``{"signal": [...]}``."""
    doc = _load_json(text)
    if isinstance(doc, dict):
        doc = doc.get("signal")
    u = _vector(doc, "signal")
    if len(u) != n:
        raise DimensionMismatch(f"signal has length {len(u)}, expected n = {n}")
    return u
