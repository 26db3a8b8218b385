import pytest

from flagweak import GroupContext, build_hasse, parse_element


@pytest.fixture(scope="session")
def b2():
    return GroupContext(2, 2)


@pytest.fixture(scope="session")
def b3():
    return GroupContext(2, 3)


@pytest.fixture(scope="session")
def b4():
    return GroupContext(2, 4)


@pytest.fixture(scope="session")
def g32():
    return GroupContext(3, 2)


@pytest.fixture(scope="session")
def hasse_b2(b2):
    return build_hasse(b2)


@pytest.fixture(scope="session")
def hasse_b3(b3):
    return build_hasse(b3)


@pytest.fixture(scope="session")
def hasse_g32(g32):
    return build_hasse(g32)


def el(ctx, text):
    """Shorthand used all over the tests."""
    return parse_element(ctx, text)
