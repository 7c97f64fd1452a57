import pytest

from quivkit import Arrow, PathElement, Quiver, QQ, build_bound_quiver_algebra, gabriel_presentation
from quivkit.algebra import opposite
from quivkit.errors import MalformedRelation, NonAdmissible
from quivkit.examples import load_fixture
from quivkit.quiver import is_acyclic


def kronecker_quiver():
    return Quiver(["0", "w"], [Arrow("a", "w", "0"), Arrow("b", "w", "0")])


def loop_quiver():
    return Quiver(["x"], [Arrow("l", "x", "x")])


def test_point_algebra():
    A = build_bound_quiver_algebra(Quiver(["x"], []), [], QQ)
    assert A.dim == 1


def test_kronecker_dimension():
    A = build_bound_quiver_algebra(kronecker_quiver(), [], QQ)
    assert A.dim == 4
    assert A.cartan().tolist() == [[1, 0], [2, 1]]


def test_canonical_relation(C223):
    assert (len(C223.vertices), len(C223.quiver.arrows), len(C223.relations)) == (6, 7, 1)
    assert C223.dim == 17
    assert C223.check_relations()


def test_multiply_idempotent_and_paths(C223):
    e = C223.vertex_vector("0")
    assert (C223.multiply(e, e) == e).all()
    a1, a2 = C223.arrow_vector("a1_1"), C223.arrow_vector("a1_2")
    prod = C223.multiply(a2, a1)
    assert prod.any()
    assert not C223.multiply(a1, a2).any()


def test_structure_is_associative_and_unital(C223):
    assert C223.is_associative()
    assert C223.is_unital()
    assert C223.is_graded()


def test_relation_mixing_endpoints():
    q = kronecker_quiver()
    with pytest.raises(MalformedRelation):
        PathElement.build(q, [(1, ["a"]), (1, ["a", "b"])], QQ)


def test_loop_without_relations_is_not_admissible():
    with pytest.raises(NonAdmissible):
        build_bound_quiver_algebra(loop_quiver(), [], QQ, length_cap=6)


def test_truncated_loop():
    q = loop_quiver()
    A = build_bound_quiver_algebra(q, [PathElement.build(q, [(1, ["l", "l", "l"])], QQ)], QQ)
    assert A.dim == 3


def test_opposite_involution(C223):
    op = opposite(C223)
    assert all(a.source == "0" for a in op.quiver.arrows if a.name.startswith("a") and a.name.endswith("_1"))
    back = opposite(op)
    assert back.dim == C223.dim
    assert back.cartan().tolist() == C223.cartan().tolist()


def test_acyclic():
    assert is_acyclic(kronecker_quiver())
    assert not is_acyclic(loop_quiver())
    assert not is_acyclic(load_fixture("ex71_A").quiver)


def test_gabriel_presentation_of_path_algebra():
    q = Quiver(["1", "2"], [Arrow("a", "1", "2")])
    A = build_bound_quiver_algebra(q, [], QQ)
    P = gabriel_presentation(A).algebra
    assert (len(P.vertices), len(P.quiver.arrows), len(P.relations)) == (2, 1, 0)


def test_gabriel_presentation_recovers_canonical(C223):
    P = gabriel_presentation(C223).algebra
    assert P.dim == 17
    assert len(P.quiver.arrows) == 7
    assert len(P.relations) == 1


def test_json_roundtrip(C223):
    from quivkit.algebra import algebra_from_json, algebra_to_json

    B = algebra_from_json(algebra_to_json(C223))
    assert B.dim == C223.dim and B.vertices == C223.vertices
