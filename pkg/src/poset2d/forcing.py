"""Edge forcing, implication classes and transitive orientation.

Two edges of an undirected graph force each other when they share a tail
(or a head) and their other endpoints are not adjacent.  A transitive
orientation is found by G-decomposition: repeatedly take the smallest
remaining pair, orient it low id -> high id, propagate forcing through the
graph that remains, and delete the class just oriented.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .digraph import (
    Digraph,
    LinearOrder,
    Orientation,
    complement,
    is_undirected,
    topological_order,
)
from .errors import CyclicInput, EdgeNotPresent, GraphError, NotOrientable


def _require_undirected(g: Digraph):
    if not is_undirected(g):
        raise GraphError("expected an undirected (symmetric) graph")


def forces(g: Digraph, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """True iff directed edge ``e1`` directly forces ``e2`` in undirected ``g``."""
    for a, b in (e1, e2):
        if not g.has_edge(a, b):
            raise EdgeNotPresent("%s-%s is not an edge" % (g.vertices.names[a], g.vertices.names[b]))
    (a, b), (c, d) = e1, e2
    if a == c:
        return b == d or not g.has_edge(b, d)
    if b == d:
        return not g.has_edge(a, c)
    return False


def _forced_by(adj, a, b):
    """Directed edges forced directly by a->b in the graph given by adjacency sets."""
    na, nb = adj[a], adj[b]
    for c in na:
        if c != b and c not in nb:
            yield a, c
    for c in nb:
        if c != a and c not in na:
            yield c, b


def forcing_components(g: Digraph) -> dict[tuple[int, int], int]:
    """Map every directed edge of undirected ``g`` to its Gamma* component.

    Components are numbered in order of their smallest directed edge.
    """
    _require_undirected(g)
    adj = g.out_sets()
    comp = {}
    k = 0
    for edge in g.edges():
        if edge in comp:
            continue
        comp[edge] = k
        queue = deque([edge])
        while queue:
            a, b = queue.popleft()
            for f in _forced_by(adj, a, b):
                if f not in comp:
                    comp[f] = k
                    queue.append(f)
        k += 1
    return comp


@dataclass(frozen=True)
class ImplicationClasses:
    """Partition of the undirected pairs ``(u, v)``, ``u < v``, into Gamma* classes."""

    classes: tuple[frozenset, ...]
    class_of: dict

    def __len__(self):
        return len(self.classes)

    def same_class(self, p, q) -> bool:
        return self.class_of[_pair(*p)] == self.class_of[_pair(*q)]

    def labelled(self, g: Digraph) -> list[set[str]]:
        names = g.vertices.names
        return [{names[u] + names[v] for u, v in c} for c in self.classes]


def _pair(u, v):
    return (u, v) if u < v else (v, u)


def implication_classes(g: Digraph) -> ImplicationClasses:
    comp = forcing_components(g)
    # a directed component and its mirror project onto the same pair set
    by_comp = {}
    for (u, v), k in comp.items():
        if u < v:
            mirror = comp[(v, u)]
            key = min(k, mirror)
            by_comp.setdefault(key, set()).add((u, v))
    classes = sorted((frozenset(s) for s in by_comp.values()), key=min)
    class_of = {p: i for i, c in enumerate(classes) for p in c}
    return ImplicationClasses(tuple(classes), class_of)


def _orient_class(adj, seed):
    """Propagate forcing from ``seed``; raise if an edge is forced both ways."""
    cls = {seed}
    queue = deque([seed])
    while queue:
        a, b = queue.popleft()
        for f in _forced_by(adj, a, b):
            if f not in cls:
                if (f[1], f[0]) in cls:
                    raise NotOrientable("forcing reaches both orientations of an edge")
                cls.add(f)
                queue.append(f)
    return cls


def _verify(g: Digraph, edges: set) -> None:
    adj = g.out_sets()
    for a, b in edges:
        for f in _forced_by(adj, a, b):
            if f not in edges:
                raise NotOrientable("orientation misses a forced edge")
    try:
        topological_order(Digraph.from_id_edges(g.vertices, edges))
    except CyclicInput:
        raise NotOrientable("orientation is cyclic") from None


def transitive_orientation(g: Digraph) -> Orientation:
    """A transitive orientation of undirected ``g``.

    Raises :class:`NotOrientable` when ``g`` is not a comparability graph.
    The result is checked against both conditions of the forcing
    characterisation (closed under forcing, acyclic) before it is returned.
    """
    _require_undirected(g)
    adj = [set(row) for row in g.out_adj]
    chosen = set()
    for u, v in g.edges():
        if u > v or v not in adj[u]:
            continue
        cls = _orient_class(adj, (u, v))
        chosen |= cls
        for a, b in cls:
            adj[a].discard(b)
            adj[b].discard(a)
    _verify(g, chosen)
    return Orientation(g.vertices, frozenset(chosen))


def is_transitively_orientable(g: Digraph) -> bool:
    try:
        transitive_orientation(g)
    except NotOrientable:
        return False
    return True


def is_permutation_graph(g: Digraph) -> bool:
    return is_transitively_orientable(g) and is_transitively_orientable(complement(g))


def complement_orientation_order(g: Digraph) -> LinearOrder:
    """A linear order whose induced orientation of ``complement(g)`` is transitive."""
    h = transitive_orientation(complement(g))
    return topological_order(h.as_digraph())
