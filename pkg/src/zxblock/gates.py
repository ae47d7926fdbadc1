"""ZX constructions of common gates and the textbook unitaries they stand for.

Wire 0 is the top wire of a ``Stack`` and the most significant qubit in
matrix indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .diagram import Compose, Diagram, Stack, XSpider, ZSpider, color_swap, compose, stack_all, wire
from .linalg import CMatrix


def zx_rz(alpha: float) -> Diagram:
    return ZSpider(1, 1, alpha)


def zx_rx(alpha: float) -> Diagram:
    return XSpider(1, 1, alpha)


def zx_hadamard() -> Diagram:
    """Euler decomposition ``Z(pi/2) X(pi/2) Z(pi/2)``; equal to H up to a phase."""
    return Compose(zx_rz(math.pi / 2), Compose(zx_rx(math.pi / 2), zx_rz(math.pi / 2)))


def zx_ry(alpha: float) -> Diagram:
    # Y rotation as an X-conjugated Z rotation
    return Compose(zx_rx(math.pi / 2), Compose(zx_rz(alpha), zx_rx(-math.pi / 2)))


def zx_y() -> Diagram:
    return Compose(zx_rz(math.pi), zx_rx(math.pi))


def zx_x() -> Diagram:
    return zx_rx(math.pi)


def zx_z() -> Diagram:
    return zx_rz(math.pi)


def zx_cnot_adjacent() -> Diagram:
    """CNOT with control on the top wire and target on the one below."""
    return Compose(Stack(ZSpider(1, 2, 0), wire()), Stack(wire(), XSpider(2, 1, 0)))


def zx_cnot_reversed() -> Diagram:
    """CNOT with control on the bottom wire: the color-swapped adjacent CNOT."""
    return color_swap(zx_cnot_adjacent())


def h_stack(n: int) -> Diagram:
    return stack_all([zx_hadamard() for _ in range(n)])


def swap_via_3_cnots() -> Diagram:
    hh = Stack(zx_hadamard(), zx_hadamard())
    reversed_cnot = compose(hh, zx_cnot_adjacent(), hh)
    return compose(zx_cnot_adjacent(), reversed_cnot, zx_cnot_adjacent())


# ---------------------------------------------------------------------------
# unitary oracles

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CNOT_REVERSED = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def rx(theta: float) -> CMatrix:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta: float) -> CMatrix:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta: float) -> CMatrix:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


@dataclass(frozen=True)
class GateUnitaryOracle:
    name: str
    build: Callable[..., CMatrix]
    diagram: Callable[..., Diagram]
    n_params: int = 0


ORACLES: dict[str, GateUnitaryOracle] = {
    o.name: o
    for o in [
        GateUnitaryOracle("rz", rz, zx_rz, 1),
        GateUnitaryOracle("rx", rx, zx_rx, 1),
        GateUnitaryOracle("ry", ry, zx_ry, 1),
        GateUnitaryOracle("h", lambda: H, zx_hadamard),
        GateUnitaryOracle("x", lambda: PAULI_X, zx_x),
        GateUnitaryOracle("y", lambda: PAULI_Y, zx_y),
        GateUnitaryOracle("z", lambda: PAULI_Z, zx_z),
        GateUnitaryOracle("cnot", lambda: CNOT, zx_cnot_adjacent),
        GateUnitaryOracle("cnot_reversed", lambda: CNOT_REVERSED, zx_cnot_reversed),
        GateUnitaryOracle("swap", lambda: SWAP, swap_via_3_cnots),
    ]
}
