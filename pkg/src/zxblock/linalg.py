"""Dense complex matrices: the semantic domain of diagrams.

Matrices are plain 2-D ``numpy`` arrays of dtype ``complex128``.  The helpers
here only pin down the conventions the rest of the package relies on.
"""

from __future__ import annotations

from functools import reduce

import numpy as np

CMatrix = np.ndarray

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def as_matrix(rows) -> CMatrix:
    m = np.asarray(rows, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    return m


def identity(n: int) -> CMatrix:
    return np.eye(n, dtype=complex)


def matmul(a: CMatrix, b: CMatrix) -> CMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product; ``a`` indexes the coarse blocks."""
    return np.kron(a, b)


def hadamard_pow(n: int) -> CMatrix:
    if n < 0:
        raise ValueError("power must be non-negative")
    return reduce(np.kron, [HADAMARD] * n, identity(1))


def approx_eq(a: CMatrix, b: CMatrix, tol: float = 1e-9) -> bool:
    """Entrywise ``|a - b| <= tol * (1 + max(|a|, |b|))``."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    bound = tol * (1 + np.maximum(np.abs(a), np.abs(b)))
    return bool(np.all(np.abs(a - b) <= bound))


def is_unitary(u: CMatrix, tol: float = 1e-10) -> bool:
    return u.shape[0] == u.shape[1] and approx_eq(u.conj().T @ u, identity(u.shape[0]), tol)


def format_complex(z: complex, precision: int = 4) -> str:
    re_, im = z.real, z.imag
    # avoid printing "-0.0000"
    if abs(re_) < 0.5 * 10**-precision:
        re_ = 0.0
    if abs(im) < 0.5 * 10**-precision:
        im = 0.0
    sign = "-" if im < 0 else "+"
    return f"{re_:.{precision}f}{sign}{abs(im):.{precision}f}i"


def format_matrix(m: CMatrix, precision: int = 4) -> str:
    """Rectangular grid of ``a+bi`` entries, columns right-aligned."""
    cells = [[format_complex(z, precision) for z in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=0)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)
