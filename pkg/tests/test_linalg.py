import cmath
import math

import numpy as np
import pytest

from conftest import random_matrix
from zxblock.linalg import approx_eq, format_matrix, hadamard_pow, identity, kron, matmul

I2 = identity(2)
H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)


def test_matmul_examples():
    assert approx_eq(matmul(I2, I2), I2, 0)
    assert approx_eq(matmul(H, H), I2, 1e-12)
    hzh = matmul(matmul(H, np.diag([1, -1])), H)
    np.testing.assert_allclose(hzh, X, atol=1e-12)


def test_matmul_shape_error():
    with pytest.raises(ValueError):
        matmul(identity(2), identity(4))


def test_kron_examples():
    assert approx_eq(kron(I2, I2), identity(4), 0)
    v = np.array([[1], [0], [0], [1]], dtype=complex)
    assert approx_eq(kron(v, identity(1)), v, 0)
    d = np.diag([1, cmath.exp(1j * math.pi)])
    np.testing.assert_allclose(kron(d, I2), np.diag([1, 1, -1, -1]), atol=1e-12)


def test_kron_top_factor_is_coarse():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    out = kron(a, I2)
    assert out[0, 2] == 2 and out[1, 3] == 2 and out[0, 1] == 0


def test_hadamard_pow():
    assert approx_eq(hadamard_pow(0), np.ones((1, 1)), 0)
    np.testing.assert_allclose(hadamard_pow(1), H, atol=1e-15)
    expected = 0.5 * np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    np.testing.assert_allclose(hadamard_pow(2), expected, atol=1e-15)


def test_approx_eq():
    assert approx_eq(I2, I2, 1e-9)
    assert not approx_eq(I2, 2 * I2, 1e-9)
    assert approx_eq(H @ H, I2, 1e-9)
    with pytest.raises(ValueError):
        approx_eq(I2, identity(4), 1e-9)


def _dims(rng):
    return [int(x) for x in rng.integers(1, 9, size=6)]


def test_mixed_product(rng):
    for _ in range(50):
        p, q, r, s, t, u = _dims(rng)
        a, b = random_matrix(rng, p, q), random_matrix(rng, r, s)
        c, d = random_matrix(rng, q, t), random_matrix(rng, s, u)
        assert approx_eq(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), 1e-9)


def test_associativity(rng):
    for _ in range(50):
        p, q, r, s, _, _ = _dims(rng)
        a, b, c = random_matrix(rng, p, q), random_matrix(rng, q, r), random_matrix(rng, r, s)
        assert approx_eq(matmul(matmul(a, b), c), matmul(a, matmul(b, c)), 1e-9)
        assert approx_eq(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-9)
        assert kron(a, b).shape == (a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def test_format_matrix():
    text = format_matrix(np.array([[1, -0.5j], [1e-9, -1 + 2j]]), precision=2)
    assert text.splitlines() == [" 1.00+0.00i  0.00-0.50i", " 0.00+0.00i -1.00+2.00i"]
