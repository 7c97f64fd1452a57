import pytest

from quivkit import CanonicalSpec, canonical_algebra, GF, QQ


@pytest.fixture(scope="session")
def C223():
    return canonical_algebra(CanonicalSpec.make((2, 2, 3), ("inf", 0, 1)), QQ)


@pytest.fixture(scope="session")
def C333():
    return canonical_algebra(CanonicalSpec.make((3, 3, 3), ("inf", 0, 1)), QQ)


@pytest.fixture(scope="session")
def C223_gf5():
    return canonical_algebra(CanonicalSpec.make((2, 2, 3), ("inf", 0, 1)), GF(5))


@pytest.fixture(scope="session")
def kronecker():
    return canonical_algebra(CanonicalSpec.make((1, 1), ("inf", 0)), QQ)
