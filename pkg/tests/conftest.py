"""Shared fixtures for the suite."""

import pytest

from residuum.currents import MonomialSeq


@pytest.fixture(scope="session")
def ex41():
    return MonomialSeq(2, ((5, 0), (4, 1), (2, 2), (0, 3)))


@pytest.fixture(scope="session")
def ex42():
    return MonomialSeq(1, ((1,), (2,)))


@pytest.fixture(scope="session")
def ex54():
    return MonomialSeq(2, ((2, 0), (1, 1), (0, 2)))


EX41_WEIGHTS = {
    "p": (1, 1, 1, 1),
    "q": (2, 2, 1, 3),
    "r": (3, 3, 4, 5),
    "s": (2, 1, 1, 2),
}


@pytest.fixture(scope="session")
def ex41_weights():
    return dict(EX41_WEIGHTS)
