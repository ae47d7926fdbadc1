"""Seeded random diagrams for property checks."""

from __future__ import annotations

import math

import numpy as np

from .diagram import Cap, Compose, Cup, Diagram, Empty, Stack, Swap, XSpider, ZSpider


def random_phase(rng: np.random.Generator) -> float:
    return float(rng.uniform(0, 2 * math.pi))


def random_spider(rng: np.random.Generator, inputs: int, outputs: int) -> Diagram:
    cls = ZSpider if rng.random() < 0.5 else XSpider
    return cls(inputs, outputs, random_phase(rng))


def _leaf(rng: np.random.Generator, n_in: int, n_out: int, swaps: bool, caps: bool) -> Diagram:
    special = {
        (0, 0): Empty,
        (2, 2): Swap if swaps else None,
        (0, 2): Cap if caps else None,
        (2, 0): Cup if caps else None,
    }.get((n_in, n_out))
    if special is not None and rng.random() < 0.4:
        return special()
    return random_spider(rng, n_in, n_out)


def random_diagram(
    rng: np.random.Generator,
    n_in: int,
    n_out: int,
    depth: int = 4,
    max_arity: int = 3,
    swaps: bool = True,
    caps: bool = True,
) -> Diagram:
    """A random well-typed diagram with the given boundary.

    No sub-diagram has more than ``max(n_in, n_out, max_arity)`` wires on a
    side, so evaluation stays cheap.
    """
    if depth <= 0 or rng.random() < 0.25:
        return _leaf(rng, n_in, n_out, swaps, caps)
    if rng.random() < 0.5:
        mid = int(rng.integers(0, max_arity + 1))
        return Compose(
            random_diagram(rng, n_in, mid, depth - 1, max_arity, swaps, caps),
            random_diagram(rng, mid, n_out, depth - 1, max_arity, swaps, caps),
        )
    i1 = int(rng.integers(0, n_in + 1))
    o1 = int(rng.integers(0, n_out + 1))
    return Stack(
        random_diagram(rng, i1, o1, depth - 1, max_arity, swaps, caps),
        random_diagram(rng, n_in - i1, n_out - o1, depth - 1, max_arity, swaps, caps),
    )


def random_shaped_diagram(
    rng: np.random.Generator, max_boundary: int = 4, **kwargs
) -> Diagram:
    n_in = int(rng.integers(0, max_boundary + 1))
    n_out = int(rng.integers(0, max_boundary + 1))
    return random_diagram(rng, n_in, n_out, **kwargs)
