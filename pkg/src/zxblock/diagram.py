"""Block-representation ZX diagrams.

A diagram is built from eight constructors: the generators ``Empty``, ``Cap``,
``Cup``, ``Swap``, ``ZSpider`` and ``XSpider``, and the two combinators
``Compose`` (sequential) and ``Stack`` (parallel).  Every diagram knows its
number of input and output wires; ``Compose`` refuses to be built when the
wires of its two halves do not line up.

Diagrams are immutable and hashable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator

TWO_PI = 2 * math.pi
PHASE_TOL = 1e-12


class DimensionMismatch(ValueError):
    """Raised when composing diagrams whose boundaries do not agree."""

    def __init__(self, left_outputs: int, right_inputs: int) -> None:
        self.left_outputs = left_outputs
        self.right_inputs = right_inputs
        super().__init__(
            f"cannot compose: first diagram has {left_outputs} outputs, "
            f"second has {right_inputs} inputs"
        )


def normalize_phase(alpha: float) -> float:
    alpha = math.fmod(float(alpha), TWO_PI)
    if alpha < 0:
        alpha += TWO_PI
    # fmod of a value just below 2pi can round up to exactly 2pi after the shift
    if alpha >= TWO_PI:
        alpha -= TWO_PI
    return alpha


def phases_equal(a: float, b: float, tol: float = PHASE_TOL) -> bool:
    d = abs(normalize_phase(a) - normalize_phase(b))
    return min(d, TWO_PI - d) <= tol


class Diagram:
    """Base class of the eight constructors."""

    n_in: int
    n_out: int

    @property
    def dims(self) -> tuple[int, int]:
        return self.n_in, self.n_out

    def __str__(self) -> str:
        return to_sexpr(self)


@dataclass(frozen=True)
class Empty(Diagram):
    n_in: int = field(default=0, init=False, repr=False)
    n_out: int = field(default=0, init=False, repr=False)


@dataclass(frozen=True)
class Cap(Diagram):
    n_in: int = field(default=0, init=False, repr=False)
    n_out: int = field(default=2, init=False, repr=False)


@dataclass(frozen=True)
class Cup(Diagram):
    n_in: int = field(default=2, init=False, repr=False)
    n_out: int = field(default=0, init=False, repr=False)


@dataclass(frozen=True)
class Swap(Diagram):
    n_in: int = field(default=2, init=False, repr=False)
    n_out: int = field(default=2, init=False, repr=False)


@dataclass(frozen=True, eq=False)
class _Spider(Diagram):
    inputs: int
    outputs: int
    alpha: float = 0.0

    def __post_init__(self) -> None:
        if self.inputs < 0 or self.outputs < 0:
            raise ValueError("spider arities must be non-negative")
        object.__setattr__(self, "inputs", int(self.inputs))
        object.__setattr__(self, "outputs", int(self.outputs))
        object.__setattr__(self, "alpha", normalize_phase(self.alpha))

    @property
    def n_in(self) -> int:  # type: ignore[override]
        return self.inputs

    @property
    def n_out(self) -> int:  # type: ignore[override]
        return self.outputs

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.inputs == other.inputs
            and self.outputs == other.outputs
            and phases_equal(self.alpha, other.alpha)
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.inputs, self.outputs))


@dataclass(frozen=True, eq=False)
class ZSpider(_Spider):
    pass


@dataclass(frozen=True, eq=False)
class XSpider(_Spider):
    pass


@dataclass(frozen=True)
class Compose(Diagram):
    first: Diagram
    second: Diagram
    n_in: int = field(init=False, repr=False, compare=False)
    n_out: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.first.n_out != self.second.n_in:
            raise DimensionMismatch(self.first.n_out, self.second.n_in)
        object.__setattr__(self, "n_in", self.first.n_in)
        object.__setattr__(self, "n_out", self.second.n_out)


@dataclass(frozen=True)
class Stack(Diagram):
    top: Diagram
    bottom: Diagram
    n_in: int = field(init=False, repr=False, compare=False)
    n_out: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_in", self.top.n_in + self.bottom.n_in)
        object.__setattr__(self, "n_out", self.top.n_out + self.bottom.n_out)


Spider = (ZSpider, XSpider)
Leaf = (Empty, Cap, Cup, Swap, ZSpider, XSpider)


def n_in(d: Diagram) -> int:
    return d.n_in


def n_out(d: Diagram) -> int:
    return d.n_out


def compose(a: Diagram, b: Diagram, *rest: Diagram) -> Diagram:
    """Sequential composition, left to right: ``a`` first, then ``b``."""
    out = Compose(a, b)
    for d in rest:
        out = Compose(out, d)
    return out


def stack(a: Diagram, b: Diagram, *rest: Diagram) -> Diagram:
    """Parallel composition, ``a`` on top."""
    out = Stack(a, b)
    for d in rest:
        out = Stack(out, d)
    return out


def stack_all(parts: list[Diagram]) -> Diagram:
    """Stack a list of diagrams top to bottom; the empty list gives ``Empty``."""
    if not parts:
        return Empty()
    return reduce(Stack, parts)


def compose_all(parts: list[Diagram]) -> Diagram:
    if not parts:
        raise ValueError("compose_all needs at least one diagram")
    return reduce(Compose, parts)


def wire() -> Diagram:
    return ZSpider(1, 1, 0.0)


def n_wire(n: int) -> Diagram:
    if n < 0:
        raise ValueError("wire count must be non-negative")
    return stack_all([wire() for _ in range(n)])


def pad(d: Diagram, above: int, below: int) -> Diagram:
    """Surround ``d`` with identity wires; zero-width padding adds nothing."""
    parts = []
    if above:
        parts.append(n_wire(above))
    parts.append(d)
    if below:
        parts.append(n_wire(below))
    return stack_all(parts)


def color_swap(d: Diagram) -> Diagram:
    if isinstance(d, ZSpider):
        return XSpider(d.inputs, d.outputs, d.alpha)
    if isinstance(d, XSpider):
        return ZSpider(d.inputs, d.outputs, d.alpha)
    if isinstance(d, Compose):
        return Compose(color_swap(d.first), color_swap(d.second))
    if isinstance(d, Stack):
        return Stack(color_swap(d.top), color_swap(d.bottom))
    return d


def recompute_dims(d: Diagram) -> tuple[int, int]:
    """Boundary sizes recomputed by recursion, ignoring the cached fields."""
    if isinstance(d, Compose):
        return recompute_dims(d.first)[0], recompute_dims(d.second)[1]
    if isinstance(d, Stack):
        ti, to = recompute_dims(d.top)
        bi, bo = recompute_dims(d.bottom)
        return ti + bi, to + bo
    if isinstance(d, (ZSpider, XSpider)):
        return d.inputs, d.outputs
    return {Empty: (0, 0), Cap: (0, 2), Cup: (2, 0), Swap: (2, 2)}[type(d)]


def leaves(d: Diagram) -> Iterator[Diagram]:
    """Generators of ``d`` in depth-first order, first child before second."""
    stack_: list[Diagram] = [d]
    while stack_:
        cur = stack_.pop()
        if isinstance(cur, Compose):
            stack_.append(cur.second)
            stack_.append(cur.first)
        elif isinstance(cur, Stack):
            stack_.append(cur.bottom)
            stack_.append(cur.top)
        else:
            yield cur


def size(d: Diagram) -> int:
    """Number of constructor occurrences."""
    if isinstance(d, Compose):
        return 1 + size(d.first) + size(d.second)
    if isinstance(d, Stack):
        return 1 + size(d.top) + size(d.bottom)
    return 1


def max_width(d: Diagram) -> int:
    """Largest boundary of any sub-diagram; bounds the cost of evaluation."""
    own = max(d.n_in, d.n_out)
    if isinstance(d, Compose):
        return max(own, max_width(d.first), max_width(d.second))
    if isinstance(d, Stack):
        return max(own, max_width(d.top), max_width(d.bottom))
    return own


# ---------------------------------------------------------------------------
# canonical s-expression text form


def _fmt_phase(alpha: float) -> str:
    if alpha == 0:
        return "0"
    return repr(alpha)


def to_sexpr(d: Diagram) -> str:
    if isinstance(d, Compose):
        return f"(compose {to_sexpr(d.first)} {to_sexpr(d.second)})"
    if isinstance(d, Stack):
        return f"(stack {to_sexpr(d.top)} {to_sexpr(d.bottom)})"
    if isinstance(d, ZSpider):
        if d.inputs == 1 and d.outputs == 1 and d.alpha == 0:
            return "(wire)"
        return f"(Z {d.inputs} {d.outputs} {_fmt_phase(d.alpha)})"
    if isinstance(d, XSpider):
        return f"(X {d.inputs} {d.outputs} {_fmt_phase(d.alpha)})"
    return f"({type(d).__name__.lower()})"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


class SexprError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise SexprError(f"unexpected character at offset {pos}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def from_sexpr(text: str) -> Diagram:
    """Read the text form written by :func:`to_sexpr`."""
    tokens = _tokenize(text)
    pos = 0

    def expect(tok: str) -> None:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise SexprError(f"expected {tok!r}, got {got!r}")
        pos += 1

    def atom() -> str:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] in "()":
            raise SexprError("expected an atom")
        pos += 1
        return tokens[pos - 1]

    def node() -> Diagram:
        expect("(")
        head = atom()
        if head in ("compose", "stack"):
            a, b = node(), node()
            expect(")")
            return Compose(a, b) if head == "compose" else Stack(a, b)
        if head in ("Z", "X"):
            i, o, alpha = int(atom()), int(atom()), float(atom())
            expect(")")
            return ZSpider(i, o, alpha) if head == "Z" else XSpider(i, o, alpha)
        simple = {"wire": wire, "empty": Empty, "cap": Cap, "cup": Cup, "swap": Swap}
        if head not in simple:
            raise SexprError(f"unknown constructor {head!r}")
        expect(")")
        return simple[head]()

    d = node()
    if pos != len(tokens):
        raise SexprError("trailing input after diagram")
    return d
