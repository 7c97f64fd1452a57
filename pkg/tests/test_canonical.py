import pytest

from quivkit import QQ, CanonicalSpec, rep as R
from quivkit.ar import tau
from quivkit.canonical import (
    arm_module_F,
    mouth_module_E,
    mouth_modules,
    parse_tube_index,
    tube_rank,
    verify_canonical_family,
)
from quivkit.errors import BadSpec


def test_kronecker_spec(kronecker):
    assert kronecker.dim == 4
    assert len(kronecker.relations) == 0


def test_spec_validation():
    with pytest.raises(BadSpec):
        CanonicalSpec.make((2, 2, 3), ("inf", 0, 0))


def test_tube_index_parsing():
    assert parse_tube_index("inf") == parse_tube_index("oo")
    assert parse_tube_index("1/2") == QQ(1) / 2


@pytest.mark.parametrize("t,rank", [("inf", 2), (0, 2), (1, 3), (2, 1), (5, 1)])
def test_tube_ranks(C223, t, rank):
    assert tube_rank(C223, t) == rank
    assert len(mouth_modules(C223, t)) == rank


def test_mouth_module_dims(C223):
    assert mouth_module_E(C223, "inf").dims == (1, 1, 0, 1, 1, 1)
    assert mouth_module_E(C223, 0).dims == (1, 1, 1, 0, 1, 1)
    assert mouth_module_E(C223, 1).dims == (1, 1, 1, 1, 0, 0)
    assert mouth_module_E(C223, 2).dims == (1,) * 6


def test_mouth_corner_at_zero_and_omega(C223):
    for t in ("inf", 0, 1, 2, 5):
        E = mouth_module_E(C223, t)
        assert R.socle_dims(E) == R.simple(C223, "0").dims
        assert R.top_dims(E) == R.simple(C223, "w").dims


def test_tau_cycle_on_exceptional_mouth(C223):
    F3 = arm_module_F(C223, 3)
    assert tau(R.simple(C223, "3,1")).dims == F3.dims
    assert R.is_isomorphic(tau(F3), R.simple(C223, "3,2"))


def test_verify_family(C223):
    rep = verify_canonical_family(C223, ["inf", 0, 1, 2])
    assert rep.ok, rep.failures
    assert list(rep.periods.values()) == [2, 2, 3, 1]


def test_verify_generic_alone(C223):
    rep = verify_canonical_family(C223, [7])
    assert rep.ok and rep.to_json()["periods"] == {"7": 1}


def test_verify_detects_corruption(C223):
    E = mouth_module_E(C223, 1)
    bad = R.Representation(C223, E.dims, [m.copy() for m in E.maps])
    k = next(i for i, m in enumerate(bad.maps) if m.size)
    bad.maps[k][0, 0] += 3
    mouths = {"1": [bad] + mouth_modules(C223, 1)[1:]}
    assert not verify_canonical_family(C223, [1], mouths=mouths).ok


def test_333_family(C333):
    assert C333.dim == 25
    rep = verify_canonical_family(C333, ["inf", 0, 1, 3])
    assert rep.ok and list(rep.periods.values()) == [3, 3, 3, 1]


def test_canonical_over_gf5(C223_gf5):
    assert verify_canonical_family(C223_gf5, ["inf", 0, 1, 2]).ok
