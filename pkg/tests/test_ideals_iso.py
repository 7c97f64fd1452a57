import pytest

from quivkit import QQ, rep as R
from quivkit.canonical import mouth_modules
from quivkit.examples import load_fixture
from quivkit.ideals import (
    Ideal,
    Subspace,
    annihilator,
    generated_ideal,
    radical_ideal,
    residual_identity,
    theorem45_check,
    trace_ideal,
)
from quivkit.iso import match_presentations
from quivkit.selfinjective import trivial_extension
from quivkit.algebra import gabriel_presentation


@pytest.fixture(scope="module")
def A71():
    return load_fixture("ex71_A_computed")


def test_zero_ideal_residual_is_everything(C223):
    assert residual_identity(C223, Subspace(C223, [], "0")) == list(range(C223.nvertices))


def test_radical_ideal(C223):
    rad = radical_ideal(C223)
    assert rad.dim == C223.dim - C223.nvertices
    assert residual_identity(C223, rad) == list(range(C223.nvertices))
    whole = Subspace(C223, [{b: QQ.one} for b in range(C223.dim)])
    assert residual_identity(C223, whole) == []


def test_generated_ideal_contains_products(C223):
    I = generated_ideal(C223, [C223.to_sparse(C223.arrow_vector("a1_1"))])
    assert I.dim >= 1
    assert I.left_closed() and I.right_closed()


def test_non_ideal_rejected(C223):
    with pytest.raises(ValueError):
        Ideal(C223, [C223.to_sparse(C223.arrow_vector("a1_2"))])


def test_annihilator_of_faithful_family(C223):
    fam = [R.projective(C223, v) for v in C223.vertices]
    assert annihilator(C223, fam).is_zero()
    tubes = [M for t in ("inf", 0, 1) for M in mouth_modules(C223, t)]
    assert annihilator(C223, tubes).is_zero()
    assert annihilator(C223, mouth_modules(C223, 2)).dim > 0


def test_annihilator_of_simples_is_radical(C223):
    simples = [R.simple(C223, v) for v in C223.vertices]
    assert annihilator(C223, simples) == radical_ideal(C223)


def test_trace_of_projectives_is_whole_algebra(C223):
    fam = [R.projective(C223, v) for v in C223.vertices]
    assert trace_ideal(C223, fam).dim == C223.dim


def test_theorem45_fails_on_radical_of_symmetric(A71):
    th = theorem45_check(A71, radical_ideal(A71))
    assert not (th["r(I) = eI"] and th["acyclic"])


def test_match_self(C223):
    assert match_presentations(C223, C223).status == "isomorphic"


def test_match_trivial_extension_against_fixture(C223):
    TC = gabriel_presentation(trivial_extension(C223)).algebra
    assert match_presentations(TC, load_fixture("ex73_A_computed")).status == "isomorphic"


def test_mismatch_is_reported_with_reason(C223):
    m = match_presentations(C223, load_fixture("ex71_B"))
    assert m.status == "not_isomorphic" and m.reason
