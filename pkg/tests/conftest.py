import pytest

from qrankwidth.graph import generate_family


@pytest.fixture
def p3():
    return generate_family("path", n=3)


@pytest.fixture
def c5():
    return generate_family("cycle", n=5)


@pytest.fixture
def k4():
    return generate_family("complete", n=4)
