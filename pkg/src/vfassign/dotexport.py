"""Graphviz DOT export for vertex-facet assignment graphs."""

from __future__ import annotations

from .bitsets import iter_indices
from .matching import VertexFacetGraph


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: VertexFacetGraph,
               matching: tuple[tuple[int, int], ...] | None = None,
               witness: tuple[int, ...] | None = None,
               witness_side: str | None = None) -> str:
    """Render the bipartite graph as undirected DOT.

    Matched edges are drawn bold; witness nodes get a double border.
    Output is deterministic: nodes and edges appear in index order.
    """
    matched = set(matching or ())
    witness_v = set()
    witness_f = set()
    if witness is not None:
        if witness_side == "FACETS":
            witness_f = set(witness)
        else:
            witness_v = set(witness)

    lines = [
        "graph vertex_facet {",
        "  rankdir=LR;",
        "  node [shape=box];",
    ]
    lines.append("  { rank=same;")
    for v in range(g.n_vertices):
        extra = ", peripheries=2" if v in witness_v else ""
        lines.append(f"    v{v} [label={_quote(g.vertex_labels[v])}{extra}];")
    lines.append("  }")
    lines.append("  { rank=same;")
    for f in range(g.n_facets):
        extra = ", peripheries=2" if f in witness_f else ""
        lines.append(f"    f{f} [label={_quote(g.facet_labels[f])}{extra}];")
    lines.append("  }")
    for v in range(g.n_vertices):
        for f in iter_indices(g.adjacency[v]):
            style = " [style=bold]" if (v, f) in matched else ""
            lines.append(f"  v{v} -- f{f}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
