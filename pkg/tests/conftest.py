import pathlib

import numpy as np
import pytest

CORPUS = pathlib.Path(__file__).parent / "corpus"


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_matrix(rng, rows, cols):
    return rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))
