"""JSON and DOT renderings of :class:`ZxGraph`."""

from __future__ import annotations

import json

from .graph import ZxGraph

SCHEMA = "zxgraph/1"


def to_json_obj(g: ZxGraph) -> dict:
    return {
        "schema": SCHEMA,
        "nodes": [{"id": k, "color": n.color, "phase": n.phase} for k, n in g.nodes.items()],
        "edges": [{"src": e.u, "dst": e.v, "hadamard": e.hadamard} for e in g.edges],
        "inputs": list(g.inputs),
        "outputs": list(g.outputs),
    }


_FILL = {"Z": "#99dd99", "X": "#ff8888"}


def to_dot(g: ZxGraph, name: str = "zx") -> str:
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for k, n in g.nodes.items():
        label = f"{n.phase:.4g}" if n.phase else ""
        lines.append(f'  n{k} [label="{label}", fillcolor="{_FILL[n.color]}", shape=circle];')
    for i, k in enumerate(g.inputs):
        lines.append(f'  in{i} [label="in{i}", shape=plaintext, style=""];')
        lines.append(f"  in{i} -- n{k};")
    for i, k in enumerate(g.outputs):
        lines.append(f'  out{i} [label="out{i}", shape=plaintext, style=""];')
        lines.append(f"  n{k} -- out{i};")
    for e in g.edges:
        style = " [style=dashed, color=blue]" if e.hadamard else ""
        lines.append(f"  n{e.u} -- n{e.v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(g: ZxGraph, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(g), separators=(",", ":"))
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'dot'")
