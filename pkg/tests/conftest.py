import sys

import numpy as np
import pytest

from qframes.gen import SplitMix64, gen_matrix, gen_quaternion, gen_vector
from qframes.qlinalg import QMatrix, QVector


def e(n, i):
    return QVector.basis(n, i)


def hermitian(rng, n):
    A = gen_matrix(rng, n, n)
    return QMatrix(0.5 * (A.data + A.H.data))


@pytest.fixture
def rng():
    return SplitMix64(20261016)


@pytest.fixture
def np_rng():
    return np.random.default_rng(7)


__all__ = ["e", "hermitian", "gen_quaternion", "gen_vector", "gen_matrix"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        ok, detail = results[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
