import pytest

from ordbench import catalog_named


@pytest.fixture(scope="session")
def c2():
    return catalog_named("C2")


@pytest.fixture(scope="session")
def c3():
    return catalog_named("C3")


@pytest.fixture(scope="session")
def b2():
    return catalog_named("B2")


@pytest.fixture(scope="session")
def m3():
    return catalog_named("M3")


@pytest.fixture(scope="session")
def n5():
    return catalog_named("N5")


@pytest.fixture(scope="session")
def f3():
    return catalog_named("F3")
