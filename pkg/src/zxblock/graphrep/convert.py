"""Block diagrams to adjacency graphs.

Two conversions are provided.  ``create_edges`` follows the label-propagation
scheme directly: every generator gets a number, every sub-diagram a pair of
label lists naming the generator closest to each boundary wire, and each
``Compose`` joins the output labels of its first half to the input labels of
its second half.  It cannot see through ``Swap``.

``annotate_with_swaps`` instead treats every generator leg as an element of a
union-find structure, joins legs at each ``Compose`` and passes them through
``Swap``; connected legs become edges.  On swap-free diagrams both produce the
same graph.

Positions in a diagram are addressed by *paths*: tuples of 0/1 choosing the
first/top (0) or second/bottom (1) child at each ``Compose``/``Stack``.

With ``hadamard_boxes=True`` every sub-diagram equal to ``zx_hadamard()`` is
treated as a single unit that marks the edge through it as a Hadamard edge
instead of contributing nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterator, Mapping

from scipy.cluster.hierarchy import DisjointSet

from ..diagram import Cap, Compose, Cup, Diagram, Empty, Stack, Swap, XSpider, ZSpider
from ..gates import zx_hadamard
from .graph import Edge, GraphError, Node, ZxGraph

Path = tuple[int, ...]

_HBOX = zx_hadamard()


class SwapPresentError(GraphError):
    def __init__(self, path: Path) -> None:
        self.path = path
        super().__init__(f"Swap at {path}: use annotate_with_swaps for diagrams with swaps")


def is_hadamard_box(d: Diagram) -> bool:
    return isinstance(d, Compose) and d == _HBOX


def _is_unit(d: Diagram, hadamard_boxes: bool) -> bool:
    if isinstance(d, (Compose, Stack)):
        return hadamard_boxes and is_hadamard_box(d)
    return True


def _children(d: Diagram) -> tuple[Diagram, Diagram]:
    if isinstance(d, Compose):
        return d.first, d.second
    return d.top, d.bottom  # type: ignore[attr-defined]


def walk(d: Diagram, hadamard_boxes: bool = False) -> Iterator[tuple[Path, Diagram]]:
    """Pre-order traversal yielding ``(path, sub-diagram)``."""
    todo: list[tuple[Path, Diagram]] = [((), d)]
    while todo:
        path, cur = todo.pop()
        yield path, cur
        if not _is_unit(cur, hadamard_boxes):
            a, b = _children(cur)
            todo.append((path + (1,), b))
            todo.append((path + (0,), a))


def units(d: Diagram, hadamard_boxes: bool = False) -> Iterator[tuple[Path, Diagram]]:
    """The generators (and, optionally, Hadamard boxes) of ``d`` in traversal order."""
    for path, sub in walk(d, hadamard_boxes):
        if _is_unit(sub, hadamard_boxes):
            yield path, sub


def number_nodes(d: Diagram, hadamard_boxes: bool = False) -> dict[Path, int]:
    """Give every constructor occurrence a fresh number, depth first from 1."""
    fresh = count(1)
    return {path: next(fresh) for path, _ in walk(d, hadamard_boxes)}


def _node_for(sub: Diagram) -> Node | None:
    if isinstance(sub, ZSpider):
        return Node("Z", sub.alpha)
    if isinstance(sub, XSpider):
        return Node("X", sub.alpha)
    if isinstance(sub, (Cap, Cup)):
        return Node("Z", 0.0)
    return None


@dataclass(frozen=True)
class EdgeAnnotation:
    in_labels: tuple[int, ...]
    out_labels: tuple[int, ...]


def _annotations(
    d: Diagram, numbering: Mapping[Path, int], hadamard_boxes: bool
) -> dict[Path, EdgeAnnotation]:
    out: dict[Path, EdgeAnnotation] = {}

    def go(sub: Diagram, path: Path) -> EdgeAnnotation:
        if _is_unit(sub, hadamard_boxes):
            if isinstance(sub, Swap):
                raise SwapPresentError(path)
            x = numbering[path]
            ann = EdgeAnnotation((x,) * sub.n_in, (x,) * sub.n_out)
        elif isinstance(sub, Stack):
            a, b = go(sub.top, path + (0,)), go(sub.bottom, path + (1,))
            ann = EdgeAnnotation(a.in_labels + b.in_labels, a.out_labels + b.out_labels)
        else:
            a, b = go(sub.first, path + (0,)), go(sub.second, path + (1,))
            ann = EdgeAnnotation(a.in_labels, b.out_labels)
        out[path] = ann
        return ann

    go(d, ())
    return out


def number_edges(
    d: Diagram, numbering: Mapping[Path, int] | None = None, hadamard_boxes: bool = False
) -> EdgeAnnotation:
    """Boundary labels of ``d``: for each wire, the number of the nearest generator."""
    numbering = numbering if numbering is not None else number_nodes(d, hadamard_boxes)
    return _annotations(d, numbering, hadamard_boxes)[()]


def _finish(
    d: Diagram,
    numbering: Mapping[Path, int],
    hadamard_boxes: bool,
    raw_edges: list[tuple[int, int]],
    inputs: list[int],
    outputs: list[int],
) -> ZxGraph:
    nodes: dict[int, Node] = {}
    boxes: set[int] = set()
    for path, sub in units(d, hadamard_boxes):
        node = _node_for(sub)
        if node is not None:
            nodes[numbering[path]] = node
        elif isinstance(sub, Compose):
            boxes.add(numbering[path])
    for b in inputs + outputs:
        if b in boxes:
            raise GraphError("a Hadamard box sits directly on a boundary wire")

    edges = [Edge(u, v, False) for u, v in raw_edges]
    # each box has exactly two incident edges; splice them into one, toggling the flag
    for box in sorted(boxes):
        inc = [e for e in edges if box in (e.u, e.v)]
        if len(inc) != 2:
            raise GraphError(f"Hadamard box {box} is not on a single wire")
        for e in inc:
            edges.remove(e)
        a, b = inc[0].other(box), inc[1].other(box)
        edges.append(Edge(a, b, inc[0].hadamard ^ inc[1].hadamard ^ True))
    return ZxGraph(nodes, tuple(edges), tuple(inputs), tuple(outputs))


def create_edges(
    d: Diagram, numbering: Mapping[Path, int] | None = None, hadamard_boxes: bool = False
) -> ZxGraph:
    """Swap-free conversion by label propagation.

    ``numbering`` overrides the default depth-first numbers; only the entries
    for generators are consulted.
    """
    numbering = numbering if numbering is not None else number_nodes(d, hadamard_boxes)
    ann = _annotations(d, numbering, hadamard_boxes)
    raw: list[tuple[int, int]] = []
    for path, sub in walk(d, hadamard_boxes):
        if isinstance(sub, Compose) and not _is_unit(sub, hadamard_boxes):
            left, right = ann[path + (0,)], ann[path + (1,)]
            raw.extend(zip(left.out_labels, right.in_labels))
    root = ann[()]
    return _finish(d, numbering, hadamard_boxes, raw, list(root.in_labels), list(root.out_labels))


def leg_classes(d: Diagram, hadamard_boxes: bool = False):
    """Union-find over generator legs.

    Returns ``(sets, owner, inputs, outputs)``: the disjoint-set structure, a map
    from leg element to ``(path, side, index)`` of the generator it belongs to
    (``Swap`` legs are owned by nobody), and the elements on the outer input
    and output boundary.
    """
    sets = DisjointSet()
    owner: dict[int, tuple[Path, str, int]] = {}
    fresh = count()

    def new(tag: tuple[Path, str, int] | None = None) -> int:
        e = next(fresh)
        sets.add(e)
        if tag is not None:
            owner[e] = tag
        return e

    def go(sub: Diagram, path: Path) -> tuple[list[int], list[int]]:
        if isinstance(sub, Swap):
            a, b = new(), new()
            return [a, b], [b, a]
        if isinstance(sub, Empty):
            return [], []
        if _is_unit(sub, hadamard_boxes):
            return (
                [new((path, "in", k)) for k in range(sub.n_in)],
                [new((path, "out", k)) for k in range(sub.n_out)],
            )
        if isinstance(sub, Stack):
            ti, to = go(sub.top, path + (0,))
            bi, bo = go(sub.bottom, path + (1,))
            return ti + bi, to + bo
        fi, fo = go(sub.first, path + (0,))
        si, so = go(sub.second, path + (1,))
        for x, y in zip(fo, si):
            sets.merge(x, y)
        return fi, so

    ins, outs = go(d, ())
    return sets, owner, ins, outs


def annotate_with_swaps(
    d: Diagram, numbering: Mapping[Path, int] | None = None, hadamard_boxes: bool = False
) -> ZxGraph:
    numbering = numbering if numbering is not None else number_nodes(d, hadamard_boxes)
    sets, owner, ins, outs = leg_classes(d, hadamard_boxes)

    def node_of(elem: int) -> int:
        legs = [owner[e] for e in sets.subset(elem) if e in owner]
        if not legs:
            raise GraphError("a boundary wire reaches another boundary without meeting a node")
        return numbering[legs[0][0]]

    raw: list[tuple[int, int]] = []
    for group in sets.subsets():
        legs = sorted(owner[e] for e in group if e in owner)
        if len(legs) == 2:
            raw.append((numbering[legs[0][0]], numbering[legs[1][0]]))
    return _finish(
        d, numbering, hadamard_boxes, raw, [node_of(e) for e in ins], [node_of(e) for e in outs]
    )
