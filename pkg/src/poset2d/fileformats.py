"""Plain-text edge lists and vertex orders.

Edge list: one ``tail head`` pair per line.  A line with a single label
declares an isolated vertex.  Blank lines and lines starting with ``#`` are
ignored.  Order: whitespace separated labels forming one permutation.
"""

from __future__ import annotations

from .digraph import Digraph, LinearOrder, VertexTable
from .errors import GraphError, ParseError, UnknownVertex


def parse_edge_list(text: str, vertices: VertexTable | None = None) -> Digraph:
    """Parse an edge list.

    With ``vertices`` the labels must come from that table (used to read a
    subgraph against its parent graph); otherwise labels are interned in
    order of first appearance.
    """
    names = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ParseError("line %d: expected 'tail head', got %r" % (lineno, raw))
        if len(parts) == 2 and parts[0] == parts[1]:
            raise ParseError("line %d: self-loop at %r" % (lineno, parts[0]))
        for p in parts:
            if vertices is not None and p not in vertices:
                raise UnknownVertex(p)
            names.setdefault(p, None)
        if len(parts) == 2:
            edges.append((parts[0], parts[1]))
    try:
        return Digraph.from_edges(edges, vertices if vertices is not None else list(names))
    except UnknownVertex:
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Digraph) -> str:
    """Edges sorted by (tail id, head id); vertices without edges get their own line."""
    names = g.vertices.names
    lines = ["%s %s" % (names[u], names[v]) for u, v in g.edges()]
    lines.extend(names[v] for v in range(g.n) if not g.out_adj[v] and not g.in_adj[v])
    return "".join(line + "\n" for line in lines)


def parse_order(text: str, vertices: VertexTable) -> LinearOrder:
    labels = [tok for line in text.splitlines() if not line.lstrip().startswith("#") for tok in line.split()]
    return LinearOrder.from_labels(vertices, labels)


def format_order(order: LinearOrder, vertices: VertexTable) -> str:
    return " ".join(order.labels(vertices)) + "\n"
