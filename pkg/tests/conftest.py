import pytest

from equivol import circle_scenario, default_corpus, su2_scenario


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def p1_hyperplane():
    return circle_scenario([[1, -1]], [1])


@pytest.fixture(scope="session")
def p1_square():
    return circle_scenario([[1, -1]], [2])


@pytest.fixture(scope="session")
def p2_circle():
    return circle_scenario([[-1, 1, 1]], [1])


@pytest.fixture(scope="session")
def p1_unstable():
    return circle_scenario([[1, 2]], [1])


@pytest.fixture(scope="session")
def su2_p3():
    return su2_scenario([[1, 1]], [1])


@pytest.fixture(scope="session")
def su2_p5():
    return su2_scenario([[1, 1, 1]], [1])


@pytest.fixture(scope="session")
def p1p1_diag():
    return circle_scenario([[(1, 0), (-1, 0)], [(0, 1), (0, -1)]], [1, 1])
