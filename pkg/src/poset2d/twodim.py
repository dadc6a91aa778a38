"""Two-linear-order reachability index for the subgraph induced by a complement orientation."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (
    Digraph,
    LinearOrder,
    VertexTable,
    complement,
    is_acyclic,
    transitivity_witness,
)
from .errors import CyclicInput, GraphError, NotTransitive, ParseError
from .forcing import is_transitively_orientable
from .merge import complement_merge

INDEX_HEADER = "dim2-index v1"


@dataclass(frozen=True)
class TwoDimIndex:
    vertices: VertexTable
    order1: LinearOrder
    order2: LinearOrder

    def __post_init__(self):
        if len(self.order1) != len(self.vertices) or len(self.order2) != len(self.vertices):
            raise GraphError("index orders do not cover the vertex table")

    def reachable_id(self, u: int, v: int) -> bool:
        r1, r2 = self.order1.rank, self.order2.rank
        return r1[u] < r1[v] and r2[u] < r2[v]

    def reachable(self, u: str, v: str) -> bool:
        return self.reachable_id(self.vertices.lookup(u), self.vertices.lookup(v))

    def dumps(self) -> str:
        names = self.vertices.names
        lines = [
            "%s n=%d" % (INDEX_HEADER, len(names)),
            " ".join(names[v] for v in self.order1.perm),
            " ".join(names[v] for v in self.order2.perm),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> TwoDimIndex:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if len(lines) != 3 or not lines[0].startswith(INDEX_HEADER + " n="):
            raise ParseError("not a dim2-index v1 file")
        try:
            n = int(lines[0][len(INDEX_HEADER) + 3:])
        except ValueError:
            raise ParseError("bad vertex count in index header") from None
        first, second = lines[1].split(), lines[2].split()
        if len(first) != n or len(second) != n:
            raise ParseError("index lines must list %d vertices" % n)
        table = VertexTable(first)
        return cls(table, LinearOrder(range(n)), LinearOrder.from_labels(table, second))


def reachable(idx: TwoDimIndex, u: str, v: str) -> bool:
    """True iff u precedes v in both orders."""
    return idx.reachable(u, v)


def build_index(g: Digraph, l_h: LinearOrder, check: bool = False) -> TwoDimIndex:
    return TwoDimIndex(
        g.vertices,
        complement_merge(g, l_h, check=check),
        complement_merge(g, l_h.reversed(), check=check),
    )


def induced_subgraph(g: Digraph, l_h: LinearOrder, idx: TwoDimIndex | None = None) -> Digraph:
    """Edges of ``g`` that survive in both orders of the index.

    Computed by filtering the edges of ``g``; the closure of H is never built.
    """
    if idx is None:
        idx = build_index(g, l_h)
    r1, r2 = idx.order1.rank, idx.order2.rank
    return g.with_edges((u, v) for u, v in g.edges() if r1[u] < r1[v] and r2[u] < r2[v])


def is_two_dimensional(g: Digraph) -> bool:
    """Order dimension at most 2, for a transitive DAG ``g``."""
    if not is_acyclic(g):
        raise CyclicInput()
    witness = transitivity_witness(g)
    if witness is not None:
        names = g.vertices.names
        raise NotTransitive((names[witness[0]], names[witness[1]]))
    return is_transitively_orientable(complement(g))
