import pytest

from quivkit import QQ, Quiver, build_bound_quiver_algebra, rep as R
from quivkit.errors import InvalidAutomorphism
from quivkit.examples import example_71, phi_squared_is_nu, push_to_orbit
from quivkit.selfinjective import (
    AutomorphismSpec,
    RepetitiveAlgebra,
    RepetitiveAutomorphism,
    classify,
    hat_module_from,
    identity_spec,
    is_selfinjective,
    is_symmetric,
    nakayama_permutation,
    nakayama_spec,
    orbit_algebra,
    push_down,
    repetitive_window,
    trivial_extension,
)


@pytest.fixture(scope="module")
def point():
    return build_bound_quiver_algebra(Quiver(["x"], []), [], QQ)


@pytest.fixture(scope="module")
def ex71():
    return example_71(QQ)


def test_trivial_extension_of_field(point):
    T = trivial_extension(point)
    assert T.dim == 2
    assert is_symmetric(T)


def test_trivial_extension_of_canonical(C223):
    T = trivial_extension(C223)
    assert T.dim == 34
    assert T.is_associative()
    assert is_selfinjective(T) and is_symmetric(T)


def test_canonical_not_selfinjective(C223):
    assert not is_selfinjective(C223)


def test_nakayama_permutation_is_identity_for_symmetric(C223):
    T = trivial_extension(C223)
    assert all(x == y for x, y in nakayama_permutation(T).items())


def test_window_of_point(point):
    W = repetitive_window(point, 0, 1)
    assert len(W.objects) == 2
    assert [W.hom_dim((0, 0), (0, 0)), W.hom_dim((0, 0), (1, 0)) + W.hom_dim((1, 0), (0, 0)),
            W.hom_dim((1, 0), (1, 0))] == [1, 1, 1]


def test_window_single_level_is_base(kronecker):
    W = repetitive_window(kronecker, 0, 0)
    assert W.algebra.dim == kronecker.dim


def test_classify():
    B = build_bound_quiver_algebra(Quiver(["x", "y"], []), [], QQ)
    assert classify(identity_spec(B)) == "rigid"
    assert classify(nakayama_spec(B)) == "strictly_positive"
    assert classify(AutomorphismSpec({0: (-1, 0), 1: (0, 1)})) == "non_positive"
    assert classify(AutomorphismSpec({0: (0, 1), 1: (0, 1)})) == "invalid"


def test_orbit_of_point_is_trivial_extension(point):
    orb = orbit_algebra(point)
    assert orb.algebra.dim == 2


def test_orbit_by_nakayama_is_trivial_extension(C223):
    A = orbit_algebra(C223).presentation.algebra
    assert A.dim == 34
    assert is_symmetric(A)


def test_phi_square_is_nakayama(ex71):
    assert phi_squared_is_nu(ex71.g)
    assert ex71.A.dim == 40
    assert len(ex71.A.vertices) == 5
    assert is_selfinjective(ex71.A)


def test_push_down_simple_and_projective(ex71):
    B = ex71.B
    for x in ("1", "5", "10"):
        S = push_to_orbit(ex71, R.simple(B, x))
        assert S.total_dim == 1
        Ph = push_down(hat_module_from(R.projective(B, x), ex71.Bhat), ex71.orbit)
        assert Ph.check_relations()


def test_push_down_simple_over_trivial_extension(C223):
    orb = orbit_algebra(C223)
    A = orb.presentation.algebra
    S = push_down(hat_module_from(R.simple(C223, "w"), orb.Bhat), orb)
    assert S.total_dim == 1
    assert S.dims[A.vertex_index("w")] == 1


def test_invalid_automorphism(C223):
    bad = AutomorphismSpec({x: (1, 0) for x in range(C223.nvertices)})
    with pytest.raises(InvalidAutomorphism):
        RepetitiveAutomorphism(RepetitiveAlgebra(C223), bad)
