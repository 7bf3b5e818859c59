from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from benthad import paley, sylvester, sylvester_form, symplectic_form
from benthad.io import parse_matrix_file

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

BUSH4 = np.array([[1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1]])


@pytest.fixture(scope="session")
def s4():
    return sylvester(2)


@pytest.fixture(scope="session")
def s16():
    return sylvester(4)


@pytest.fixture(scope="session")
def symp16():
    return sylvester_form(symplectic_form(4))


@pytest.fixture(scope="session")
def p36():
    return paley(17, "II")


@pytest.fixture(scope="session")
def bush16():
    # B4 (x) B4 with indices regrouped into 4x4 blocks
    return parse_matrix_file(DATA / "bush16.had")


@pytest.fixture(scope="session")
def trivial16():
    # a random P S_16 Q whose strong automorphism group is just {I, -I}
    return parse_matrix_file(DATA / "trivial16.had")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
