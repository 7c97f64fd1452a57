import pytest

from quivkit import QQ, Branch, BranchExtensionSpec, branch_extension, one_point_coextension, one_point_extension
from quivkit import rep as R
from quivkit.canonical import mouth_module_E
from quivkit.errors import BadSpec, MouthMismatch, NotBrick
from quivkit.examples import coextension_B, load_fixture
from quivkit.extensions import ad1
from quivkit.iso import match_presentations


def test_extension_by_zero_adds_isolated_point(C223):
    A = one_point_extension(C223, R.zero_rep(C223), "x")
    assert A.dim == C223.dim + 1
    assert len(A.quiver.arrows) == len(C223.quiver.arrows)


def test_extension_by_simple_projective(C223):
    A = one_point_extension(C223, R.simple(C223, "0"), "x")
    assert len(A.quiver.arrows) == 8
    assert len(A.relations) == len(C223.relations)
    assert R.projective(A, "x").total_dim == 2


def test_extension_by_top_simple_kills_paths(C223):
    A = one_point_extension(C223, R.simple(C223, "w"), "x")
    new = A.relations[len(C223.relations):]
    assert sorted(r.terms[0][1][1] for r in new) == ["a1_2", "a2_2", "a3_3"]
    assert R.projective(A, "x").total_dim == 2


def test_extension_by_mouth_module(C223):
    E = mouth_module_E(C223, 1)
    A = one_point_extension(C223, E, "x")
    assert A.dim == C223.dim + E.total_dim + 1
    assert R.radical(R.projective(A, "x"))[0].total_dim == E.total_dim


def test_coextension_by_zero(C223):
    A = one_point_coextension(C223, R.zero_rep(C223), "x")
    assert A.dim == C223.dim + 1


def test_coextension_injective(C223):
    E = mouth_module_E(C223, "inf")
    A = one_point_coextension(C223, E, "x")
    assert R.injective(A, "x").total_dim == E.total_dim + 1


def test_ad1_degenerate_case(C223):
    S = R.simple(C223, "3,1")
    assert len(ad1(C223, S, 0, "x").quiver.arrows) == 8


def test_ad1_with_line(C223):
    S = R.simple(C223, "3,1")
    A = ad1(C223, S, 2, "x")
    assert len(A.vertices) == 9
    assert A.dim == C223.dim + 3 + (S.total_dim + 2 + 1)


def test_ad1_needs_brick(C223):
    S = R.simple(C223, "w")
    with pytest.raises(NotBrick):
        ad1(C223, R.direct_sum([S, S]), 1)


def test_empty_branch_spec(C223):
    B, steps = branch_extension(BranchExtensionSpec(C223, []))
    assert B.dim == C223.dim and steps == []


def test_branch_needs_mouth_module(C223):
    P = R.projective(C223, "w")
    with pytest.raises(MouthMismatch):
        branch_extension(BranchExtensionSpec(C223, [(P, Branch(["x"]), None)]))


def test_branch_direction(C223):
    with pytest.raises(BadSpec):
        branch_extension(BranchExtensionSpec(C223, [], direction="sideways"))


def test_coextension_of_worked_example():
    B, C = coextension_B(QQ)
    assert len(B.vertices) == 10
    assert B.dim == 40
    assert match_presentations(B, load_fixture("ex71_B")).status == "isomorphic"
