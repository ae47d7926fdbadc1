"""Equality of matrices and diagrams up to a non-zero complex scalar."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import Diagram
from .linalg import CMatrix, format_complex
from .semantics import DEFAULT_MAX_WIRES, semantics

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Proportional:
    scalar: complex

    def __bool__(self) -> bool:
        return True

    def report(self) -> str:
        return f"PROPORTIONAL c={_fmt(self.scalar)}"


@dataclass(frozen=True)
class NotProportional:
    row: int
    col: int
    expected: complex
    actual: complex

    def __bool__(self) -> bool:
        return False

    def report(self) -> str:
        return (
            f"MISMATCH at ({self.row},{self.col}): "
            f"expected {_fmt(self.expected)}, got {_fmt(self.actual)}"
        )


@dataclass(frozen=True)
class DimensionMismatch:
    left: tuple[int, int]
    right: tuple[int, int]

    def __bool__(self) -> bool:
        return False

    def report(self) -> str:
        return f"MISMATCH dimensions {self.left[0]}x{self.left[1]} vs {self.right[0]}x{self.right[1]}"


PropResult = Proportional | NotProportional | DimensionMismatch


def _fmt(z: complex) -> str:
    # shortest round-trip text for each part, e.g. 1+0i
    z = complex(z)
    re_ = f"{z.real:.10g}"
    im = f"{abs(z.imag):.10g}"
    sign = "-" if z.imag < 0 else "+"
    return f"{re_}{sign}{im}i"


def proportional(a: CMatrix, b: CMatrix, tol: float = DEFAULT_TOL) -> PropResult:
    """Decide whether ``a == c * b`` for some non-zero ``c``.

    The scalar is read off at the largest-magnitude entry of ``b``; every entry
    is then checked against ``|a_ij - c b_ij| <= tol (1 + |c b_ij|)``.  Two
    all-zero matrices are proportional with witness 1.
    """
    if a.shape != b.shape:
        return DimensionMismatch(a.shape, b.shape)
    flat = int(np.argmax(np.abs(b)))
    r, k = divmod(flat, b.shape[1])
    pivot = b[r, k]
    if abs(pivot) <= tol:
        big = np.argwhere(np.abs(a) > tol)
        if len(big) == 0:
            return Proportional(1 + 0j)
        i, j = (int(x) for x in big[0])
        return NotProportional(i, j, complex(b[i, j]), complex(a[i, j]))
    c = complex(a[r, k] / pivot)
    if abs(c) <= tol:
        return NotProportional(r, k, complex(pivot), complex(a[r, k]))
    scaled = c * b
    bad = np.argwhere(np.abs(a - scaled) > tol * (1 + np.abs(scaled)))
    if len(bad):
        i, j = (int(x) for x in bad[0])
        return NotProportional(i, j, complex(scaled[i, j]), complex(a[i, j]))
    return Proportional(c)


def diagrams_proportional(
    d1: Diagram, d2: Diagram, tol: float = DEFAULT_TOL, max_wires: int = DEFAULT_MAX_WIRES
) -> PropResult:
    if d1.dims != d2.dims:
        return DimensionMismatch(d1.dims, d2.dims)
    return proportional(semantics(d1, max_wires), semantics(d2, max_wires), tol)
