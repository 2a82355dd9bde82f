import pytest

from stingycolor import complete, cycle, path, petersen


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def pete():
    return petersen()
