"""Linear-map semantics of block diagrams.

The evaluator is a structural fold: generators map to fixed matrices, ``Stack``
to the Kronecker product and ``Compose`` to the matrix product (second diagram
on the left).  A diagram with ``n`` inputs and ``m`` outputs evaluates to a
``2**m x 2**n`` matrix.

``braket_spider_oracle`` builds spider matrices a second way, as a sum of two outer
products of basis states, and is used to cross-check the corner-entry
construction.
"""

from __future__ import annotations

import cmath
from functools import reduce

import numpy as np

from .diagram import Cap, Compose, Cup, Diagram, Empty, Stack, Swap, XSpider, ZSpider
from .linalg import CMatrix, hadamard_pow

DEFAULT_MAX_WIRES = 12

_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
_CAP = np.array([[1], [0], [0], [1]], dtype=complex)
_CUP = _CAP.T.copy()


class SizeLimitError(ValueError):
    """A diagram is too wide to evaluate densely."""


def z_spider_semantics(inputs: int, outputs: int, alpha: float) -> CMatrix:
    rows, cols = 2**outputs, 2**inputs
    m = np.zeros((rows, cols), dtype=complex)
    m[0, 0] = 1
    # for a 0-legged spider both corners are (0, 0) and the terms add up
    m[rows - 1, cols - 1] += cmath.exp(1j * alpha)
    return m


def x_spider_semantics(inputs: int, outputs: int, alpha: float) -> CMatrix:
    return hadamard_pow(outputs) @ z_spider_semantics(inputs, outputs, alpha) @ hadamard_pow(inputs)


def _basis_power(vec: np.ndarray, n: int) -> np.ndarray:
    return reduce(np.kron, [vec] * n, np.ones(1, dtype=complex))


def braket_spider_oracle(color: str, inputs: int, outputs: int, alpha: float) -> CMatrix:
    """Spider matrix as ``|a..a><a..a| + e^{i alpha} |b..b><b..b|``.

    ``color`` is ``"Z"`` (computational basis) or ``"X"`` (plus/minus basis).
    """
    if color == "Z":
        a = np.array([1, 0], dtype=complex)
        b = np.array([0, 1], dtype=complex)
    elif color == "X":
        a = np.array([1, 1], dtype=complex) / np.sqrt(2)
        b = np.array([1, -1], dtype=complex) / np.sqrt(2)
    else:
        raise ValueError(f"unknown spider color {color!r}")
    ket_a, bra_a = _basis_power(a, outputs), _basis_power(a, inputs)
    ket_b, bra_b = _basis_power(b, outputs), _basis_power(b, inputs)
    return np.outer(ket_a, bra_a.conj()) + cmath.exp(1j * alpha) * np.outer(ket_b, bra_b.conj())


def semantics(d: Diagram, max_wires: int = DEFAULT_MAX_WIRES) -> CMatrix:
    """Evaluate ``d`` to its ``2**n_out x 2**n_in`` matrix.

    Raises SizeLimitError if ``d`` or any of its sub-diagrams has more than
    ``max_wires`` wires on either side.
    """
    if max(d.n_in, d.n_out) > max_wires:
        raise SizeLimitError(
            f"diagram with {d.n_in} inputs and {d.n_out} outputs exceeds "
            f"the limit of {max_wires} wires"
        )
    if isinstance(d, Compose):
        first = semantics(d.first, max_wires)
        second = semantics(d.second, max_wires)
        return second @ first
    if isinstance(d, Stack):
        return np.kron(semantics(d.top, max_wires), semantics(d.bottom, max_wires))
    if isinstance(d, ZSpider):
        return z_spider_semantics(d.inputs, d.outputs, d.alpha)
    if isinstance(d, XSpider):
        return x_spider_semantics(d.inputs, d.outputs, d.alpha)
    if isinstance(d, Empty):
        return np.ones((1, 1), dtype=complex)
    if isinstance(d, Swap):
        return _SWAP.copy()
    if isinstance(d, Cap):
        return _CAP.copy()
    if isinstance(d, Cup):
        return _CUP.copy()
    raise TypeError(f"not a diagram: {d!r}")
