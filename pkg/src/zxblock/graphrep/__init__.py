"""Graph representation of ZX diagrams and the conversion from block form."""

from .convert import (
    EdgeAnnotation,
    SwapPresentError,
    annotate_with_swaps,
    create_edges,
    is_hadamard_box,
    number_edges,
    number_nodes,
)
from .export import SCHEMA, export_graph
from .graph import Edge, GraphError, Node, ZxGraph, fuse_spiders
from .restricted import is_restricted, restriction_violations, split_spider, to_restricted_form

__all__ = [
    "SCHEMA",
    "Edge",
    "EdgeAnnotation",
    "GraphError",
    "Node",
    "SwapPresentError",
    "ZxGraph",
    "annotate_with_swaps",
    "create_edges",
    "export_graph",
    "fuse_spiders",
    "is_hadamard_box",
    "is_restricted",
    "number_edges",
    "number_nodes",
    "restriction_violations",
    "split_spider",
    "to_restricted_form",
]
