"""Adjacency-based ZX graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from ..diagram import normalize_phase


@dataclass(frozen=True)
class Node:
    color: str  # "Z" or "X"
    phase: float = 0.0

    def __post_init__(self) -> None:
        if self.color not in ("Z", "X"):
            raise ValueError(f"node color must be 'Z' or 'X', not {self.color!r}")
        object.__setattr__(self, "phase", normalize_phase(self.phase))


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge; endpoints are stored smaller id first."""

    u: int
    v: int
    hadamard: bool = False

    def __post_init__(self) -> None:
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def other(self, n: int) -> int:
        return self.v if n == self.u else self.u


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class ZxGraph:
    nodes: Mapping[int, Node] = field(default_factory=dict)
    edges: tuple[Edge, ...] = ()
    inputs: tuple[int, ...] = ()
    outputs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", MappingProxyType(dict(sorted(self.nodes.items()))))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        for e in self.edges:
            if e.u not in self.nodes or e.v not in self.nodes:
                raise GraphError(f"edge {e} refers to an unknown node")
        for b in self.inputs + self.outputs:
            if b not in self.nodes:
                raise GraphError(f"boundary refers to unknown node {b}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZxGraph):
            return NotImplemented
        return (
            dict(self.nodes) == dict(other.nodes)
            and self.edges == other.edges
            and self.inputs == other.inputs
            and self.outputs == other.outputs
        )

    __hash__ = None  # type: ignore[assignment]

    def degree(self, n: int) -> int:
        """Edge endpoints at ``n`` (a self-loop counts twice) plus boundary attachments."""
        d = sum((e.u == n) + (e.v == n) for e in self.edges)
        return d + self.inputs.count(n) + self.outputs.count(n)

    def edge_pairs(self) -> set[frozenset[int]]:
        return {frozenset((e.u, e.v)) for e in self.edges}


def fuse_spiders(g: ZxGraph, a: int, b: int) -> ZxGraph:
    """Merge node ``b`` into ``a`` across their plain edges.

    Phases add; every plain edge between the two disappears and the remaining
    edges and boundary attachments of ``b`` move to ``a``.  This is a purely
    structural operation.
    """
    if a == b:
        raise GraphError("cannot fuse a node with itself")
    if a not in g.nodes or b not in g.nodes:
        raise GraphError("unknown node")
    na, nb = g.nodes[a], g.nodes[b]
    if na.color != nb.color:
        raise GraphError(f"nodes {a} and {b} have different colors")
    between = [e for e in g.edges if {e.u, e.v} == {a, b}]
    if not any(not e.hadamard for e in between):
        raise GraphError(f"nodes {a} and {b} are not joined by a plain edge")

    edges = []
    for e in g.edges:
        if {e.u, e.v} == {a, b} and not e.hadamard:
            continue
        u = a if e.u == b else e.u
        v = a if e.v == b else e.v
        edges.append(Edge(u, v, e.hadamard))
    nodes = {k: n for k, n in g.nodes.items() if k != b}
    nodes[a] = Node(na.color, na.phase + nb.phase)
    relabel = lambda xs: tuple(a if x == b else x for x in xs)  # noqa: E731
    return ZxGraph(nodes, tuple(edges), relabel(g.inputs), relabel(g.outputs))
