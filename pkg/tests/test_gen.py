import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qframes.errors import GenerationFailure, InvalidConfig
from qframes.fileformat import FamilyFile, dumps
from qframes.frames import analyze
from qframes.gen import GenConfig, Kind, SplitMix64, gen_family, gen_quaternion, gen_vector
from qframes.qlinalg import columns_matrix, invert, is_orthonormal, op_norm, rank
from qframes.riesz import LOWER_BOUND_ZERO, NOT_INVERTIBLE, is_riesz_basis

GOLDEN = Path(__file__).parent / "golden"

# Reference outputs of the published SplitMix64 algorithm.
SPLITMIX_1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]


def test_splitmix_reference_stream():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == SPLITMIX_1234567
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_first_draw_matches_golden():
    expected = json.loads((GOLDEN / "gen_quaternion_seed42.json").read_text())
    assert gen_quaternion(SplitMix64(42)).to_list() == expected


@given(st.integers(0, 2**64 - 1))
def test_equal_seeds_equal_streams(seed):
    a, b = SplitMix64(seed), SplitMix64(seed)
    assert [a.next_u64() for _ in range(8)] == [b.next_u64() for _ in range(8)]


@given(st.integers(0, 2**64 - 1))
def test_components_in_range(seed):
    rng = SplitMix64(seed)
    for _ in range(10):
        assert all(-1.0 <= c <= 1.0 for c in gen_quaternion(rng).to_list())


def test_vector_draws_continue_the_stream():
    rng = SplitMix64(5)
    v = gen_vector(rng, 2)
    again = SplitMix64(5)
    assert v[0] == gen_quaternion(again) and v[1] == gen_quaternion(again)


@pytest.mark.parametrize("kind", [k.value for k in Kind])
def test_reproducible_serialisation(kind):
    n, m = 3, 5
    if kind == "ONB":
        m = 3
    if kind == "RIESZ":
        m = 3
    cfg = GenConfig(77, n, m, kind)
    a, b = gen_family(cfg), gen_family(cfg)
    fa = FamilyFile(n=n, vectors=list(a.vectors), U=a.U, gen=a.config.to_dict())
    fb = FamilyFile(n=n, vectors=list(b.vectors), U=b.U, gen=b.config.to_dict())
    assert dumps(fa) == dumps(fb)


def test_onb_kind():
    X = gen_family(GenConfig(1, 3, 3, "ONB")).vectors
    assert is_orthonormal(X) and len(X) == 3
    part = gen_family(GenConfig(1, 4, 2, "ONB")).vectors
    assert is_orthonormal(part) and len(part) == 2
    with pytest.raises(InvalidConfig):
        gen_family(GenConfig(1, 2, 3, "ONB"))


@pytest.mark.parametrize("seed", range(6))
def test_riesz_kind(seed):
    fam = gen_family(GenConfig(seed, 4, 4, "RIESZ", condition_cap=50.0))
    assert is_riesz_basis(fam.vectors)
    cond = op_norm(fam.U) * op_norm(invert(fam.U))
    assert cond <= 50.0
    report = analyze(fam.vectors)
    assert report.upper_bound == pytest.approx(op_norm(fam.U) ** 2, rel=1e-7)


def test_riesz_kind_needs_square():
    with pytest.raises(InvalidConfig):
        gen_family(GenConfig(0, 3, 4, "RIESZ"))


def test_unreachable_condition_cap_fails():
    with pytest.raises(GenerationFailure):
        gen_family(GenConfig(0, 6, 6, "RIESZ", condition_cap=1.0 + 1e-12))


def test_frame_kind():
    X = gen_family(GenConfig(3, 3, 7, "FRAME")).vectors
    assert len(X) == 7 and analyze(X).is_frame
    with pytest.raises(InvalidConfig):
        gen_family(GenConfig(3, 3, 2, "FRAME"))


def test_bessel_only_kind():
    X = gen_family(GenConfig(3, 4, 6, "BESSEL_ONLY")).vectors
    rep = analyze(X)
    assert rep.is_bessel and not rep.is_frame and rep.rank < 4
    with pytest.raises(InvalidConfig):
        gen_family(GenConfig(3, 1, 2, "BESSEL_ONLY"))


def test_rank_deficient_kind():
    X = gen_family(GenConfig(8, 3, 3, "RANK_DEFICIENT")).vectors
    assert X[-1] == X[0]
    v = is_riesz_basis(X)
    assert not v and v.tag in (NOT_INVERTIBLE, LOWER_BOUND_ZERO)
    with pytest.raises(InvalidConfig):
        gen_family(GenConfig(8, 3, 1, "RANK_DEFICIENT"))


def test_overcomplete_kind():
    fam = gen_family(GenConfig(8, 3, 2, "OVERCOMPLETE"))
    assert len(fam.vectors) == 4 and fam.config.count == 4
    assert rank(columns_matrix(fam.vectors)) == 3
    assert is_riesz_basis(fam.vectors).tag == LOWER_BOUND_ZERO


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(seed=-1, dim=2, count=2, kind="ONB"),
        dict(seed=2**64, dim=2, count=2, kind="ONB"),
        dict(seed=0, dim=0, count=2, kind="ONB"),
        dict(seed=0, dim=2, count=0, kind="ONB"),
        dict(seed=0, dim=2, count=2, kind="TIGHT"),
        dict(seed=0, dim=2, count=2, kind="RIESZ", condition_cap=0.5),
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(InvalidConfig):
        GenConfig(**kwargs)


def test_config_echo():
    cfg = GenConfig(5, 2, 2, "riesz")
    assert cfg.to_dict() == {"seed": 5, "dim": 2, "count": 2, "kind": "RIESZ", "condition_cap": 1e6}
