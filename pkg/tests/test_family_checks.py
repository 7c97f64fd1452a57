import pytest

from quivkit import rep as R
from quivkit.ar import knit_tube
from quivkit.canonical import mouth_modules
from quivkit.errors import DepthInsufficient, HasProjectives
from quivkit.examples import example_73
from quivkit.family_checks import (
    CERTIFIED,
    INCONCLUSIVE,
    REFUTED,
    check_ms,
    fragment_from,
    quasi_tube_stats,
    refute_by_factorization,
    simple_factorization,
    standardness_via_mouth,
)

TUBES = ("inf", 0, 1, 2, 5)


@pytest.fixture(scope="module")
def TC():
    return example_73().A


@pytest.fixture(scope="module")
def fragments(C223):
    return [knit_tube(mouth_modules(C223, t), len(mouth_modules(C223, t)) + 2) for t in TUBES]


def test_stats_exceptional_and_generic(fragments):
    assert [quasi_tube_stats(T) for T in fragments] == [(1, 0, 2), (1, 0, 2), (2, 0, 3), (0, 0, 1), (0, 0, 1)]


def test_stats_need_depth(C223):
    with pytest.raises(DepthInsufficient):
        quasi_tube_stats(knit_tube(mouth_modules(C223, 1), 2))


def test_canonical_family_is_saturated(C223, fragments):
    rep = check_ms(fragments, C223.vertex_index("0"), C223.vertex_index("w"), [str(t) for t in TUBES])
    assert rep.ms1 and rep.ms2 and rep.ms3
    assert set(rep.witnesses["MS3"]["E"]) == {str(t) for t in TUBES}
    assert rep.notes


def test_ms2_detects_designated_simple_inside(C223, fragments):
    rep = check_ms(fragments, C223.vertex_index("0"), C223.vertex_index("3,1"))
    assert not rep.ms2
    assert rep.witnesses["MS2"][0] == {"simple_in_family": C223.vertex_index("3,1")}


def test_ms3_missing_when_top_wrong(C223, fragments):
    rep = check_ms(fragments[3:], C223.vertex_index("0"), C223.vertex_index("1,1"))
    assert not rep.ms3
    assert rep.witnesses["MS3"]["missing"] == ["0", "1"]


def test_mouth_certification(fragments):
    assert all(standardness_via_mouth(T).status == CERTIFIED for T in fragments)


def test_single_brick_mouth(C223):
    assert standardness_via_mouth(mouth_modules(C223, 7)).status == CERTIFIED


def test_mouth_refutes_non_orthogonal(C223):
    E = mouth_modules(C223, 2)[0]
    v = standardness_via_mouth([E, E])
    assert v.status == REFUTED and v.evidence["hom"] == [0, 1]


def test_projectives_rejected(TC):
    T = fragment_from(R.radical(R.projective(TC, "3,1"))[0])
    assert T.projectives
    with pytest.raises(HasProjectives):
        standardness_via_mouth(T)


def test_factorization_through_top_of_projective(TC):
    P = R.projective(TC, "1,1")
    f, y = simple_factorization(P)
    assert TC.vertices[y] == "1,1"
    assert refute_by_factorization(P, "P").status == REFUTED


def test_factorization_inconclusive_on_brick(C223):
    assert refute_by_factorization(mouth_modules(C223, 2)[0]).status == INCONCLUSIVE
