import pytest

from gammaq import structures


@pytest.fixture(scope="session")
def lz3():
    return structures.lz3()


@pytest.fixture(scope="session")
def lz3_mu():
    return structures.lz3_mu()


@pytest.fixture(scope="session")
def const2():
    return structures.const2()


@pytest.fixture(scope="session")
def mod16():
    return structures.mod16()


@pytest.fixture(scope="session")
def mod4mul():
    return structures.mod4mul()


@pytest.fixture(scope="session")
def t2():
    return structures.t2()


@pytest.fixture(scope="session")
def all_structures():
    return structures.bundled()
