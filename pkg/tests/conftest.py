import random

import pytest

from macring.corpus import acceptance_corpus, cycle, points, rp2_6, simplex, simplex_boundary
from macring.simplicial import SimplicialComplex


@pytest.fixture(scope="session")
def corpus():
    return acceptance_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return {name: K for name, K in corpus.items() if K.m <= 4}


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def point():
    return simplex(1)


@pytest.fixture
def two_points():
    return points(2)


@pytest.fixture
def triangle_boundary():
    return simplex_boundary(3)


@pytest.fixture
def pentagon():
    return cycle(5)


@pytest.fixture
def rp2():
    return rp2_6()


@pytest.fixture
def empty1():
    return SimplicialComplex(1, {0})


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS.values():
            terminalreporter.write_line(line)
