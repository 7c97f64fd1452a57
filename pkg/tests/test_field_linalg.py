import numpy as np
import pytest
from gmpy2 import mpq

from quivkit import linalg as la
from quivkit.errors import BadField
from quivkit.field import GF, QQ, field_from_json
from quivkit.formats import parse_field


def test_rational_arithmetic_is_exact():
    a = QQ.array([[1, 2], [3, 4]])
    inv = la.inverse(a, QQ)
    assert inv.tolist() == [[mpq(-2), mpq(1)], [mpq(3, 2), mpq(-1, 2)]]
    assert QQ.is_zero_matrix(QQ.matmul(a, inv) - QQ.eye(2))


def test_prime_field_inverse():
    F = GF(7)
    for x in range(1, 7):
        assert (x * F.inv(x)) % 7 == 1


def test_rank_kernel_image():
    a = QQ.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert la.rank(a, QQ) == 2
    k = la.kernel(a, QQ)
    assert k.shape == (3, 1)
    assert QQ.is_zero_matrix(QQ.matmul(a, k))
    assert la.image(a, QQ).shape[1] == 2


def test_rank_over_gf2_differs_from_q():
    a = [[1, 1], [1, -1]]
    assert la.rank(QQ.array(a), QQ) == 2
    assert la.rank(GF(2).array(a), GF(2)) == 1


def test_solve_roundtrip():
    F = GF(11)
    rng = np.random.default_rng(3)
    a = F.array(rng.integers(0, 11, (4, 4)))
    while not la.is_invertible(a, F):
        a = F.array(rng.integers(0, 11, (4, 4)))
    b = F.array(rng.integers(0, 11, (4, 2)))
    x = la.solve(a, b, F)
    assert np.array_equal(F.matmul(a, x), b)


def test_echelon_basis_membership():
    eb = la.EchelonBasis(QQ)
    eb.add({0: mpq(1), 2: mpq(1)})
    eb.add({1: mpq(2)})
    assert eb.contains({0: mpq(3), 1: mpq(1), 2: mpq(3)})
    assert not eb.contains({2: mpq(1)})


@pytest.mark.parametrize("text,tag", [("Q", "Q"), ("GF(5)", {"GF": 5}), ("gf:3", {"GF": 3})])
def test_parse_field(text, tag):
    assert parse_field(text).tag() == tag


def test_field_tags_roundtrip():
    for F in (QQ, GF(2), GF(101)):
        assert field_from_json(F.tag()).tag() == F.tag()


def test_bad_field():
    with pytest.raises(BadField):
        parse_field("R")
