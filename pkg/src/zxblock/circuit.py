"""Gate-list circuits and their lowering to block diagrams.

Qubit 0 is the top wire and the most significant bit of matrix indices.
Non-adjacent two-qubit gates are lowered by moving one qubit next to the other
with an arbitrary swap, applying the adjacent construction, and swapping back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import gates
from .diagram import Compose, Diagram, Swap, compose_all, n_wire, pad
from .linalg import CMatrix
from .semantics import DEFAULT_MAX_WIRES, SizeLimitError


@dataclass(frozen=True)
class Rx:
    theta: float
    target: int


@dataclass(frozen=True)
class Ry:
    theta: float
    target: int


@dataclass(frozen=True)
class Rz:
    theta: float
    target: int


@dataclass(frozen=True)
class H:
    target: int


@dataclass(frozen=True)
class X:
    target: int


@dataclass(frozen=True)
class Z:
    target: int


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int


Gate = Rx | Ry | Rz | H | X | Z | CNOT
ROTATIONS = (Rx, Ry, Rz)


def gate_qubits(g: Gate) -> tuple[int, ...]:
    if isinstance(g, CNOT):
        return (g.control, g.target)
    return (g.target,)


@dataclass(frozen=True)
class Circuit:
    qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        for g in self.gates:
            for idx in gate_qubits(g):
                if not 0 <= idx < self.qubits:
                    raise ValueError(f"{g} addresses qubit {idx} of a {self.qubits}-qubit circuit")
            if isinstance(g, CNOT) and g.control == g.target:
                raise ValueError("control equals target")


# ---------------------------------------------------------------------------
# wire permutations


def _adjacent_swap(n: int, k: int) -> Diagram:
    """Swap wires ``k`` and ``k+1`` of an ``n``-wire diagram."""
    return pad(Swap(), k, n - k - 2)


def shift_top_to(n: int) -> Diagram:
    """Move wire 0 to position ``n-1``; every other wire moves up by one."""
    if n < 1:
        raise ValueError("need at least one wire")
    if n == 1:
        return n_wire(1)
    return compose_all([_adjacent_swap(n, k) for k in range(n - 1)])


def shift_to_top(n: int) -> Diagram:
    """Inverse of :func:`shift_top_to`: move wire ``n-1`` to position 0."""
    if n < 1:
        raise ValueError("need at least one wire")
    if n == 1:
        return n_wire(1)
    return compose_all([_adjacent_swap(n, k) for k in reversed(range(n - 1))])


def arbitrary_swap(q: int, i: int, j: int) -> Diagram:
    """Exchange wires ``i`` and ``j`` of a ``q``-wire diagram."""
    if i == j:
        raise ValueError("cannot swap a wire with itself")
    if not (0 <= i < q and 0 <= j < q):
        raise IndexError(f"wires {i}, {j} out of range for {q} wires")
    i, j = min(i, j), max(i, j)
    span = j - i + 1
    # wire i sinks to j, then the old j (now at j-1) rises to i
    if span == 2:
        body: Diagram = Swap()
    else:
        body = Compose(shift_top_to(span), pad(shift_to_top(span - 1), 0, 1))
    return pad(body, i, q - j - 1)


# ---------------------------------------------------------------------------
# lowering


def _single_qubit_diagram(g: Gate) -> Diagram:
    if isinstance(g, Rx):
        return gates.zx_rx(g.theta)
    if isinstance(g, Ry):
        return gates.zx_ry(g.theta)
    if isinstance(g, Rz):
        return gates.zx_rz(g.theta)
    if isinstance(g, H):
        return gates.zx_hadamard()
    if isinstance(g, X):
        return gates.zx_x()
    if isinstance(g, Z):
        return gates.zx_z()
    raise TypeError(f"not a single-qubit gate: {g!r}")


def lower_gate(g: Gate, q: int) -> Diagram:
    if not isinstance(g, CNOT):
        return pad(_single_qubit_diagram(g), g.target, q - g.target - 1)
    top, bottom = sorted((g.control, g.target))
    core = gates.zx_cnot_adjacent() if g.control < g.target else gates.zx_cnot_reversed()
    placed = pad(core, top, q - top - 2)
    if bottom == top + 1:
        return placed
    bring = arbitrary_swap(q, top + 1, bottom)
    return compose_all([bring, placed, bring])


def lower_circuit(c: Circuit) -> Diagram:
    if not c.gates:
        return n_wire(c.qubits)
    return compose_all([lower_gate(g, c.qubits) for g in c.gates])


# ---------------------------------------------------------------------------
# reference unitaries


def _single_qubit_unitary(g: Gate) -> CMatrix:
    if isinstance(g, Rx):
        return gates.rx(g.theta)
    if isinstance(g, Ry):
        return gates.ry(g.theta)
    if isinstance(g, Rz):
        return gates.rz(g.theta)
    return {H: gates.H, X: gates.PAULI_X, Z: gates.PAULI_Z}[type(g)]


def _embed(u: CMatrix, target: int, q: int) -> CMatrix:
    return np.kron(np.kron(np.eye(2**target), u), np.eye(2 ** (q - target - 1)))


def _cnot_unitary(control: int, target: int, q: int) -> CMatrix:
    dim = 2**q
    m = np.zeros((dim, dim), dtype=complex)
    cbit, tbit = 1 << (q - 1 - control), 1 << (q - 1 - target)
    for b in range(dim):
        m[b ^ tbit if b & cbit else b, b] = 1
    return m


def oracle_unitary(c: Circuit, max_qubits: int = DEFAULT_MAX_WIRES) -> CMatrix:
    """The circuit's unitary, built directly from textbook gate matrices."""
    if c.qubits > max_qubits:
        raise SizeLimitError(f"{c.qubits} qubits exceeds the limit of {max_qubits}")
    u = np.eye(2**c.qubits, dtype=complex)
    for g in c.gates:
        if isinstance(g, CNOT):
            step = _cnot_unitary(g.control, g.target, c.qubits)
        else:
            step = _embed(_single_qubit_unitary(g), g.target, c.qubits)
        u = step @ u
    return u


def random_circuit(rng: np.random.Generator, qubits: int, n_gates: int) -> Circuit:
    kinds = ["rx", "ry", "rz", "h", "x", "z"] + (["cx"] if qubits > 1 else [])
    out: list[Gate] = []
    for _ in range(n_gates):
        kind = kinds[rng.integers(len(kinds))]
        if kind == "cx":
            a, b = rng.choice(qubits, size=2, replace=False)
            out.append(CNOT(int(a), int(b)))
            continue
        t = int(rng.integers(qubits))
        theta = float(rng.uniform(0, 2 * math.pi))
        out.append(
            {"rx": lambda: Rx(theta, t), "ry": lambda: Ry(theta, t), "rz": lambda: Rz(theta, t),
             "h": lambda: H(t), "x": lambda: X(t), "z": lambda: Z(t)}[kind]()
        )
    return Circuit(qubits, tuple(out))
