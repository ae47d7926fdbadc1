import json
import math

import numpy as np
import pydot
import pytest

from zxblock.diagram import Cap, Compose, Cup, Stack, Swap, XSpider, ZSpider, wire
from zxblock.gates import zx_hadamard
from zxblock.generate import random_diagram
from zxblock.graphrep import (
    Edge,
    EdgeAnnotation,
    GraphError,
    Node,
    SwapPresentError,
    ZxGraph,
    annotate_with_swaps,
    create_edges,
    export_graph,
    fuse_spiders,
    number_edges,
    number_nodes,
)

Z = ZSpider

# The worked example: two stacked columns, spiders numbered as drawn
# (top-left 1, bottom-left 3, top-right 2, bottom-right 4).
FIGURE = Compose(Stack(Z(1, 1, 0), Z(1, 2, 0)), Stack(Z(2, 1, 0), Z(1, 1, 0)))
FIGURE_NUMBERS = {(0, 0): 1, (0, 1): 3, (1, 0): 2, (1, 1): 4}


def test_number_nodes_examples():
    assert number_nodes(Z(1, 1, 0.5)) == {(): 1}
    assert number_nodes(Compose(Z(1, 1, 0), XSpider(1, 1, 0))) == {(): 1, (0,): 2, (1,): 3}
    n = number_nodes(FIGURE)
    assert sorted(n.values()) == list(range(1, 8))
    assert n[()] == 1 and n[(0,)] == 2 and n[(0, 0)] == 3


def test_number_nodes_hadamard_boxes_atomic():
    d = Compose(Z(1, 1, 0), zx_hadamard())
    assert number_nodes(d, hadamard_boxes=True) == {(): 1, (0,): 2, (1,): 3}
    assert len(number_nodes(d)) > 3


def test_number_edges_examples():
    assert number_edges(Z(2, 1, 0.3), {(): 5}) == EdgeAnnotation((5, 5), (5,))
    s = Stack(Z(1, 1, 0), Z(1, 1, 0))
    assert number_edges(s, {(0,): 1, (1,): 2}) == EdgeAnnotation((1, 2), (1, 2))
    # the outer lists are carried forward across the composition
    assert number_edges(FIGURE, FIGURE_NUMBERS) == EdgeAnnotation((1, 3), (2, 4))
    with pytest.raises(SwapPresentError):
        number_edges(Swap())


def test_figure_example():
    g = create_edges(FIGURE, FIGURE_NUMBERS)
    assert g.edge_pairs() == {frozenset(p) for p in [(1, 2), (3, 2), (3, 4)]}
    assert g.inputs == (1, 3) and g.outputs == (2, 4)
    assert all(not e.hadamard for e in g.edges)
    assert annotate_with_swaps(FIGURE, FIGURE_NUMBERS) == g


def test_create_edges_small():
    g = create_edges(Compose(Z(1, 1, 0.1), Z(1, 1, 0.2)))
    # default numbering: root 1, children 2 and 3
    assert g.edges == (Edge(2, 3),)
    assert g.inputs == (2,) and g.outputs == (3,)
    assert g.nodes[2].phase == pytest.approx(0.1)

    g = create_edges(Stack(Z(1, 1, 0), Z(1, 1, 0)))
    assert g.edges == () and len(g.inputs) == 2 and len(g.outputs) == 2


def test_caps_become_z_nodes():
    g = create_edges(Compose(Cap(), Cup()))
    assert {n.color for n in g.nodes.values()} == {"Z"}
    assert len(g.edges) == 2


def test_swap_rejected_by_literal_path():
    with pytest.raises(SwapPresentError):
        create_edges(Compose(Stack(Z(1, 1, 0), Z(1, 1, 0)), Swap()))


def test_swap_crossing_in_connectivity():
    d = Compose(Stack(Z(1, 1, 0), Z(1, 1, 0)), Compose(Swap(), Stack(Z(1, 1, 0), Z(1, 1, 0))))
    numbers = {(0, 0): 3, (0, 1): 4, (1, 1, 0): 1, (1, 1, 1): 2}
    g = annotate_with_swaps(d, numbers)
    assert g.edge_pairs() == {frozenset((3, 2)), frozenset((4, 1))}


def test_swap_on_outputs():
    d = Compose(Stack(Z(1, 1, 0), Z(1, 1, 0)), Swap())
    g = annotate_with_swaps(d, {(0, 0): 1, (0, 1): 2})
    assert g.outputs == (2, 1) and g.inputs == (1, 2)


def test_boundary_to_boundary_wire_rejected():
    with pytest.raises(GraphError):
        annotate_with_swaps(Stack(Z(1, 1, 0), Swap()))


def test_swap_free_agreement(rng):
    for _ in range(100):
        d = random_diagram(rng, int(rng.integers(0, 4)), int(rng.integers(0, 4)), swaps=False)
        assert annotate_with_swaps(d) == create_edges(d)


def test_hadamard_edge_contraction():
    d = Compose(Z(1, 1, 0), Compose(zx_hadamard(), Z(1, 1, 0)))
    g = create_edges(d, hadamard_boxes=True)
    assert len(g.nodes) == 2
    assert len(g.edges) == 1 and g.edges[0].hadamard
    # two boxes in a row cancel
    d2 = Compose(Z(1, 1, 0), Compose(Compose(zx_hadamard(), zx_hadamard()), Z(1, 1, 0)))
    (e,) = annotate_with_swaps(d2, hadamard_boxes=True).edges
    assert not e.hadamard


def _two_nodes(*edges, a=0.3, b=1.1):
    return ZxGraph({1: Node("Z", a), 2: Node("Z", b), 3: Node("Z")}, edges, (1,), (2,))


def test_fuse_single_edge():
    g = _two_nodes(Edge(1, 2), Edge(2, 3, True))
    f = fuse_spiders(g, 1, 2)
    assert set(f.nodes) == {1, 3}
    assert f.nodes[1].phase == pytest.approx(1.4)
    assert f.edges == (Edge(1, 3, True),)
    assert f.inputs == (1,) and f.outputs == (1,)


def test_fuse_parallel_edges():
    g = _two_nodes(Edge(1, 2), Edge(1, 2), Edge(2, 1), a=math.pi, b=math.pi)
    f = fuse_spiders(g, 1, 2)
    assert f.edges == () and f.nodes[1].phase == pytest.approx(0)
    assert len(f.nodes) == len(g.nodes) - 1


def test_fuse_errors():
    with pytest.raises(GraphError):
        fuse_spiders(_two_nodes(Edge(1, 2, True)), 1, 2)
    with pytest.raises(GraphError):
        fuse_spiders(_two_nodes(Edge(1, 2)), 1, 1)
    g = ZxGraph({1: Node("Z"), 2: Node("X")}, (Edge(1, 2),))
    with pytest.raises(GraphError):
        fuse_spiders(g, 1, 2)


def test_graph_validation():
    with pytest.raises(GraphError):
        ZxGraph({1: Node("Z")}, (Edge(1, 2),))
    with pytest.raises(ValueError):
        Node("Y")


def test_json_export():
    obj = json.loads(export_graph(ZxGraph()))
    assert obj.pop("schema") == "zxgraph/1"
    assert obj == {"nodes": [], "edges": [], "inputs": [], "outputs": []}
    obj = json.loads(export_graph(create_edges(FIGURE, FIGURE_NUMBERS)))
    assert [n["id"] for n in obj["nodes"]] == [1, 2, 3, 4]
    assert len(obj["edges"]) == 3
    assert obj["inputs"] == [1, 3] and obj["outputs"] == [2, 4]


def test_dot_export_parses():
    d = Compose(Z(1, 2, 0.5), Compose(Stack(zx_hadamard(), wire()), Z(2, 1, 0)))
    g = create_edges(d, hadamard_boxes=True)
    (parsed,) = pydot.graph_from_dot_data(export_graph(g, "dot"))
    assert parsed.get_type() == "graph"
    styles = [e.get("style") for e in parsed.get_edges()]
    assert styles.count("dashed") == 1
    with pytest.raises(ValueError):
        export_graph(g, "svg")
