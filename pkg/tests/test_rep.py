import numpy as np

from quivkit import rep as R
from quivkit.canonical import mouth_module_E


def test_projectives_and_injectives(C223):
    assert R.projective(C223, "w").dims == (2, 1, 1, 1, 1, 1)
    assert R.projective(C223, "3,2").dims == (1, 0, 0, 0, 1, 1)
    assert R.injective(C223, "0").dims == (1, 2, 1, 1, 1, 1)
    assert R.injective(C223, "w").dims == (0, 1, 0, 0, 0, 0)


def test_kronecker_projective(kronecker):
    P = R.projective(kronecker, "w")
    assert P.dims == (2, 1)
    assert R.is_brick(P)
    assert [M.dims for M in R.decompose(P)] == [(2, 1)]


def test_relations_and_perturbation(C223):
    E = mouth_module_E(C223, "inf")
    assert E.check_relations()
    bad = R.Representation(E.algebra, E.dims, [m.copy() for m in E.maps])
    k = next(i for i, m in enumerate(bad.maps) if m.size)
    bad.maps[k][0, 0] += 1
    assert not bad.check_relations()
    assert R.zero_rep(C223).check_relations()


def test_hom_dimensions(C223):
    P0, Pw = R.projective(C223, "0"), R.projective(C223, "w")
    assert R.hom_dim(P0, Pw) == 2
    assert R.hom_dim(Pw, P0) == 0
    E = mouth_module_E(C223, 2)
    assert R.hom_dim(Pw, E) == 1
    assert R.hom(E, E).dim == 1


def test_hom_basis_are_morphisms(C223):
    M, N = R.projective(C223, "3,2"), R.injective(C223, "0")
    H = R.hom(M, N)
    assert H.dim == R.hom_dim(M, N)
    for f in H.basis:
        assert R.is_morphism(f, M, N)


def test_bricks_and_orthogonality(C223):
    E2, E5 = mouth_module_E(C223, 2), mouth_module_E(C223, 5)
    assert R.is_brick(E2)
    assert R.are_orthogonal(E2, E5)
    assert not R.are_orthogonal(E2, E2)


def test_top_socle_radical(C223):
    E = mouth_module_E(C223, 1)
    assert R.top_dims(E) == (0, 1, 0, 0, 0, 0)
    assert R.socle_dims(E) == (1, 0, 0, 0, 0, 0)
    rad, inc = R.radical(E)
    assert rad.total_dim == E.total_dim - 1


def test_dual_is_involutive(C223):
    M = R.projective(C223, "w")
    D = R.dual(M)
    assert D.dims == M.dims
    assert R.is_isomorphic(R.dual(D), M)
    assert R.injective(C223, "w").dims == R.dual(R.projective(R.opposite_algebra(C223), "w")).dims


def test_decompose_direct_sum(C223):
    M = R.direct_sum([R.simple(C223, "0"), mouth_module_E(C223, 2), R.projective(C223, "1,1")])
    parts = sorted(m.dims for m in R.decompose(M))
    assert parts == [(1, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0), (1, 1, 1, 1, 1, 1)]
    assert R.is_indecomposable(mouth_module_E(C223, 2))
    assert not R.is_indecomposable(M)


def test_decompose_same_simple_twice(C223):
    S = R.simple(C223, "w")
    assert [m.dims for m in R.decompose(R.direct_sum([S, S]))] == [S.dims, S.dims]


def test_isomorphism_detects_parameter(C223):
    assert not R.is_isomorphic(mouth_module_E(C223, 2), mouth_module_E(C223, 5))
    assert R.is_isomorphic(mouth_module_E(C223, 5), mouth_module_E(C223, 5))


def test_restrict_to_full_idempotent_is_identity(C223):
    M = mouth_module_E(C223, "inf")
    res = R.restrict(M, C223.vertices)
    assert res.dims == M.dims


def test_extend_kronecker_regular_is_indecomposable(C223):
    N = R.restrict(mouth_module_E(C223, 2), ["0", "w"])
    L = R.extend(N, C223, ["0", "w"])
    assert L.check_relations()
    assert R.is_indecomposable(L)
    assert R.restrict(L, ["0", "w"]).dims == (1, 1)


def test_json_roundtrip(C223):
    M = mouth_module_E(C223, 1)
    N = R.representation_from_json(C223, M.to_json())
    assert N.same_as(M)


def test_gf_modules(C223_gf5):
    M = mouth_module_E(C223_gf5, 2)
    assert M.check_relations() and R.is_brick(M)
    assert all(m.dtype == np.int64 for m in M.maps)
