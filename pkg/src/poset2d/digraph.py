"""Simple directed graphs over interned vertex labels.

Graphs are immutable.  Vertices are text labels mapped to dense integer ids
in first-appearance order, and every deterministic tie-break in the package
is by id.  Undirected graphs are ordinary digraphs whose edge set is
symmetric.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import CyclicInput, GraphError, IncompleteOrder, UnknownVertex


class VertexTable:
    """Bijection between vertex labels and ids ``0..n-1``."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self.index = {}
        for i, name in enumerate(self.names):
            if not isinstance(name, str) or not name or name.split() != [name]:
                raise GraphError("invalid vertex label %r" % (name,))
            if name in self.index:
                raise GraphError("duplicate vertex label %r" % (name,))
            self.index[name] = i

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, label):
        return label in self.index

    def __eq__(self, other):
        return isinstance(other, VertexTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VertexTable(%r)" % (list(self.names),)

    def lookup(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def name_of(self, i: int) -> str:
        return self.names[i]


class Digraph:
    """Immutable simple digraph with sorted adjacency tuples.

    ``out_adj[v]`` and ``in_adj[v]`` are sorted tuples of vertex ids.  Self
    loops are rejected, duplicate edges are merged.
    """

    __slots__ = ("vertices", "out_adj", "in_adj", "m", "_out_sets", "_out_bits", "_nbrs")

    def __init__(self, vertices: VertexTable | Iterable[str], out_adj: Sequence[Iterable[int]]):
        if not isinstance(vertices, VertexTable):
            vertices = VertexTable(vertices)
        n = len(vertices)
        if len(out_adj) != n:
            raise GraphError("adjacency has %d rows for %d vertices" % (len(out_adj), n))
        out = []
        ins = [[] for _ in range(n)]
        m = 0
        for u, succ in enumerate(out_adj):
            row = sorted(set(succ))
            if row and (row[0] < 0 or row[-1] >= n):
                raise GraphError("vertex id out of range in row %d" % u)
            if u in row:
                raise GraphError("self-loop at %r" % vertices.names[u])
            for v in row:
                ins[v].append(u)
            out.append(tuple(row))
            m += len(row)
        self.vertices = vertices
        self.out_adj = tuple(out)
        # rows of ins are filled in increasing u, hence already sorted
        self.in_adj = tuple(tuple(r) for r in ins)
        self.m = m
        self._out_sets = None
        self._out_bits = None
        self._nbrs = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] | VertexTable | None = None):
        """Build from labelled edges.

        With ``vertices`` given the vertex set is fixed and unknown labels
        raise :class:`UnknownVertex`; otherwise labels are interned in
        order of first appearance.
        """
        edges = list(edges)
        if vertices is None:
            names = {}
            for a, b in edges:
                names.setdefault(a, None)
                names.setdefault(b, None)
            table = VertexTable(names)
        elif isinstance(vertices, VertexTable):
            table = vertices
        else:
            table = VertexTable(vertices)
        adj = [[] for _ in range(len(table))]
        for a, b in edges:
            adj[table.lookup(a)].append(table.lookup(b))
        return cls(table, adj)

    @classmethod
    def from_id_edges(cls, vertices, edges: Iterable[tuple[int, int]]):
        if not isinstance(vertices, VertexTable):
            vertices = VertexTable(vertices)
        adj = [[] for _ in range(len(vertices))]
        for u, v in edges:
            adj[u].append(v)
        return cls(vertices, adj)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.out_adj == other.out_adj

    def __hash__(self):
        return hash((self.vertices, self.out_adj))

    def __repr__(self):
        return "Digraph(n=%d, m=%d)" % (self.n, self.m)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as id pairs, sorted by tail then head."""
        for u, row in enumerate(self.out_adj):
            for v in row:
                yield u, v

    def label_edges(self) -> list[tuple[str, str]]:
        names = self.vertices.names
        return [(names[u], names[v]) for u, v in self.edges()]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def out_sets(self) -> tuple[frozenset, ...]:
        if self._out_sets is None:
            self._out_sets = tuple(frozenset(r) for r in self.out_adj)
        return self._out_sets

    def out_bits(self) -> tuple[int, ...]:
        """Successor sets as integer bitmasks."""
        if self._out_bits is None:
            bits = []
            for row in self.out_adj:
                b = 0
                for v in row:
                    b |= 1 << v
                bits.append(b)
            self._out_bits = tuple(bits)
        return self._out_bits

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_sets()[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v`` in the undirected closure."""
        if self._nbrs is None:
            self._nbrs = tuple(
                tuple(sorted(set(o).union(i))) if o and i else (o or i)
                for o, i in zip(self.out_adj, self.in_adj)
            )
        return self._nbrs[v]

    def is_subgraph_of(self, other: Digraph) -> bool:
        if self.vertices != other.vertices:
            return False
        sets = other.out_sets()
        return all(sets[u].issuperset(row) for u, row in enumerate(self.out_adj))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> Digraph:
        """A graph on the same vertex table with the given id edges."""
        return Digraph.from_id_edges(self.vertices, edges)

    def lookup(self, label: str) -> int:
        return self.vertices.lookup(label)


@dataclass(frozen=True)
class LinearOrder:
    """A permutation of vertex ids; ``perm[p]`` is the vertex at position p."""

    perm: tuple[int, ...]
    rank: tuple[int, ...]

    def __init__(self, perm: Iterable[int]):
        perm = tuple(perm)
        n = len(perm)
        rank = [-1] * n
        for p, v in enumerate(perm):
            if not 0 <= v < n or rank[v] != -1:
                raise IncompleteOrder("not a permutation of 0..%d" % (n - 1))
            rank[v] = p
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def from_labels(cls, vertices: VertexTable, labels: Iterable[str]) -> LinearOrder:
        ids = [vertices.lookup(x) for x in labels]
        if len(set(ids)) != len(ids):
            raise IncompleteOrder("order repeats a vertex")
        if len(ids) != len(vertices):
            missing = sorted(set(range(len(vertices))) - set(ids))
            raise IncompleteOrder(
                "order misses %d vertices (e.g. %r)" % (len(missing), vertices.names[missing[0]])
            )
        return cls(ids)

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def labels(self, vertices: VertexTable) -> list[str]:
        return [vertices.names[v] for v in self.perm]

    def reversed(self) -> LinearOrder:
        return LinearOrder(self.perm[::-1])

    def before(self, u: int, v: int) -> bool:
        return self.rank[u] < self.rank[v]


@dataclass(frozen=True)
class Orientation:
    """An oriented edge set: never contains both (a, b) and (b, a)."""

    vertices: VertexTable
    edges: frozenset

    def __post_init__(self):
        edges = frozenset(self.edges)
        object.__setattr__(self, "edges", edges)
        for a, b in edges:
            if (b, a) in edges:
                names = self.vertices.names
                raise GraphError("not oriented: both %s-%s directions present" % (names[a], names[b]))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        return edge in self.edges

    def as_digraph(self) -> Digraph:
        return Digraph.from_id_edges(self.vertices, self.edges)

    def inverse(self) -> Orientation:
        return Orientation(self.vertices, frozenset((b, a) for a, b in self.edges))

    def label_edges(self) -> list[tuple[str, str]]:
        names = self.vertices.names
        return [(names[a], names[b]) for a, b in sorted(self.edges)]


def _bits_to_ids(b: int) -> list[int]:
    out = []
    while b:
        low = b & -b
        out.append(low.bit_length() - 1)
        b ^= low
    return out


def inverse(g: Digraph) -> Digraph:
    return Digraph(g.vertices, g.in_adj)


def transitive_closure(g: Digraph) -> Digraph:
    """Minimal transitive supergraph of an acyclic ``g``.

    Raises :class:`CyclicInput` on cyclic input; condense first.
    """
    order = topological_order(g).perm
    reach = [0] * g.n
    for v in reversed(order):
        b = 0
        for w in g.out_adj[v]:
            b |= (1 << w) | reach[w]
        reach[v] = b
    return Digraph(g.vertices, [_bits_to_ids(b) for b in reach])


def undirected_closure(g: Digraph) -> Digraph:
    return Digraph(g.vertices, [g.neighbors(v) for v in range(g.n)])


def complement(g: Digraph) -> Digraph:
    """Undirected graph on all vertex pairs not adjacent in ``g``."""
    n = g.n
    full = (1 << n) - 1
    rows = []
    for v in range(n):
        adj = 1 << v
        for w in g.neighbors(v):
            adj |= 1 << w
        rows.append(_bits_to_ids(full & ~adj))
    return Digraph(g.vertices, rows)


def transitivity_witness(g: Digraph) -> tuple[int, int] | None:
    """Return some missing edge (a, c) with a->b->c in g, or None."""
    bits = g.out_bits()
    for a, row in enumerate(g.out_adj):
        have = bits[a] | (1 << a)
        for b in row:
            missing = bits[b] & ~have
            if missing:
                return a, (missing & -missing).bit_length() - 1
    return None


def is_transitive(g: Digraph) -> bool:
    return transitivity_witness(g) is None


def is_acyclic(g: Digraph) -> bool:
    try:
        topological_order(g)
    except CyclicInput:
        return False
    return True


def is_oriented(g: Digraph) -> bool:
    sets = g.out_sets()
    return not any(u in sets[v] for u, v in g.edges())


def is_undirected(g: Digraph) -> bool:
    return g.out_adj == g.in_adj


def topological_order(g: Digraph) -> LinearOrder:
    """Kahn's algorithm, always taking the smallest available id."""
    indeg = [len(r) for r in g.in_adj]
    ready = [v for v in range(g.n) if not indeg[v]]
    heapq.heapify(ready)
    out = []
    while ready:
        v = heapq.heappop(ready)
        out.append(v)
        for w in g.out_adj[v]:
            indeg[w] -= 1
            if not indeg[w]:
                heapq.heappush(ready, w)
    if len(out) != g.n:
        raise CyclicInput()
    return LinearOrder(out)


def condense(g: Digraph) -> tuple[Digraph, list[int]]:
    """Quotient of ``g`` by its strongly connected components.

    Components are numbered by their smallest member id and labelled by
    their member labels joined with ``+``.  Returns the acyclic quotient and
    the vertex -> component id map.
    """
    nxg = nx.DiGraph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    comps = sorted(sorted(c) for c in nx.strongly_connected_components(nxg))
    comp_of = [0] * g.n
    for k, members in enumerate(comps):
        for v in members:
            comp_of[v] = k
    names = g.vertices.names
    table = VertexTable("+".join(names[v] for v in members) for members in comps)
    adj = [set() for _ in comps]
    for u, v in g.edges():
        if comp_of[u] != comp_of[v]:
            adj[comp_of[u]].add(comp_of[v])
    return Digraph(table, adj), comp_of


def orientation_from_order(pairs: Digraph, order: LinearOrder) -> Orientation:
    """Orient every pair {a, b} of an undirected graph as a->b iff a precedes b."""
    if len(order) != pairs.n:
        raise IncompleteOrder("order has %d vertices, graph has %d" % (len(order), pairs.n))
    rank = order.rank
    edges = frozenset((u, v) for u, v in pairs.edges() if rank[u] < rank[v])
    return Orientation(pairs.vertices, edges)
