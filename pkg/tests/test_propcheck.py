import math

import numpy as np
import pytest

from conftest import random_matrix
from zxblock.diagram import Cap, Compose, Stack, Swap, XSpider, ZSpider, n_wire
from zxblock.generate import random_diagram
from zxblock.propcheck import (
    DimensionMismatch,
    NotProportional,
    Proportional,
    diagrams_proportional,
    proportional,
)
from zxblock.semantics import semantics

H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
X = np.array([[0, 1], [1, 0]])


def test_reflexive_witness_one(rng):
    a = random_matrix(rng, 4, 2)
    r = proportional(a, a, 1e-9)
    assert isinstance(r, Proportional) and r.scalar == pytest.approx(1)


def test_constructed_scalar():
    r = proportional(2j * H, H, 1e-9)
    assert isinstance(r, Proportional)
    assert r.scalar == pytest.approx(2j)


def test_identity_vs_x():
    r = proportional(np.eye(2), X, 1e-9)
    assert isinstance(r, NotProportional)
    assert (r.row, r.col) in {(0, 0), (0, 1)}
    assert not r


def test_dimension_mismatch():
    assert isinstance(proportional(np.eye(2), np.eye(4)), DimensionMismatch)
    assert isinstance(diagrams_proportional(Cap(), ZSpider(0, 1, 0)), DimensionMismatch)


def test_zero_matrices():
    z = np.zeros((2, 2))
    r = proportional(z, z)
    assert isinstance(r, Proportional) and r.scalar == 1
    assert isinstance(proportional(np.eye(2), z), NotProportional)
    assert isinstance(proportional(z, np.eye(2)), NotProportional)


def test_witness_is_nonzero_and_violation_is_concrete(rng):
    for _ in range(50):
        a, b = random_matrix(rng, 2, 4), random_matrix(rng, 2, 4)
        r = proportional(a, b)
        assert isinstance(r, NotProportional)
        assert r.actual == a[r.row, r.col]


def test_diagram_examples():
    r = diagrams_proportional(ZSpider(1, 1, 0), XSpider(1, 1, 0), 1e-9)
    assert isinstance(r, Proportional) and r.scalar == pytest.approx(1)
    r = diagrams_proportional(Cap(), ZSpider(0, 2, 0), 1e-9)
    assert isinstance(r, Proportional) and r.scalar == pytest.approx(1)
    assert isinstance(diagrams_proportional(Swap(), n_wire(2), 1e-9), NotProportional)


def test_reports():
    assert Proportional(1).report() == "PROPORTIONAL c=1+0i"
    assert Proportional(0.5 - 2j).report() == "PROPORTIONAL c=0.5-2i"
    line = NotProportional(0, 1, 1, 0).report()
    assert line.startswith("MISMATCH at (0,1): ")


def _scalar(rng):
    return complex(rng.normal(), rng.normal()) + 0.1


def test_equivalence_relation(rng):
    for _ in range(100):
        a = random_matrix(rng, 4, 4)
        s, t = _scalar(rng), _scalar(rng)
        ab = proportional(s * a, a, 1e-9)
        ba = proportional(a, s * a, 1e-9)
        assert isinstance(ab, Proportional) and isinstance(ba, Proportional)
        assert abs(ab.scalar * ba.scalar - 1) <= 1e-6
        # transitivity through a common middle
        assert proportional(s * a, t * a, 1e-9)


def test_congruence(rng):
    for _ in range(50):
        i, m, o = (int(x) for x in rng.integers(0, 3, size=3))
        d1 = random_diagram(rng, i, m, depth=2)
        d2 = random_diagram(rng, m, o, depth=2)
        # a proportional partner: stack an unrelated closed diagram with non-zero value
        d1p = Stack(d1, ZSpider(0, 0, 0.3))
        d2p = Stack(ZSpider(0, 0, 1.1), d2)
        assert diagrams_proportional(d1, d1p) and diagrams_proportional(d2, d2p)
        assert diagrams_proportional(Compose(d1, d2), Compose(d1p, d2p))
        assert diagrams_proportional(Stack(d1, d2), Stack(d1p, d2p))
