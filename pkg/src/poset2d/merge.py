"""Merging a DAG with an orientation of its complement into one linear order.

``merge`` is the classic heap-driven topological sort, with ties broken by
rank in the complement orientation.  ``complement_merge`` turns the problem
around: it follows the complement order ``l_h`` and breaks ties with a
linearization of ``g``.  Instead of tracking the unprocessed ancestors in
H it keeps their count (the countdown).  It visits only edges of ``g`` and
never materialises H, whose size may be quadratic.
"""

from __future__ import annotations

import heapq

from .digraph import Digraph, LinearOrder, topological_order, transitivity_witness
from .errors import CyclicInput, IncompleteOrder, NotTransitive, Stall


def _check_cover(g: Digraph, order: LinearOrder):
    if len(order) != g.n:
        raise IncompleteOrder("order has %d vertices, graph has %d" % (len(order), g.n))


class ReadyPool:
    """Min-heap of vertices keyed by their rank in a fixed linear order."""

    __slots__ = ("_heap", "_rank", "_perm")

    def __init__(self, order: LinearOrder):
        self._heap = []
        self._rank = order.rank
        self._perm = order.perm

    def __len__(self):
        return len(self._heap)

    def push(self, v: int):
        heapq.heappush(self._heap, self._rank[v])

    def pop(self) -> int:
        return self._perm[heapq.heappop(self._heap)]


def merge(g: Digraph, l_comp: LinearOrder) -> LinearOrder:
    """Linear extension of acyclic ``g`` and the orientation described by ``l_comp``.

    Repeatedly emits the source of the remaining graph that comes first in
    ``l_comp``.  When ``l_comp`` describes a transitive orientation of the
    complement of the closure of ``g``, the result is the unique common
    linear extension.
    """
    _check_cover(g, l_comp)
    indeg = [len(r) for r in g.in_adj]
    pool = ReadyPool(l_comp)
    for v in range(g.n):
        if not indeg[v]:
            pool.push(v)
    out = []
    while pool:
        s = pool.pop()
        out.append(s)
        for w in g.out_adj[s]:
            indeg[w] -= 1
            if not indeg[w]:
                pool.push(w)
    if len(out) != g.n:
        raise CyclicInput()
    return LinearOrder(out)


def initial_countdown(g: Digraph, l_h: LinearOrder) -> list[int]:
    """rank_H(v) minus the number of neighbours of v that precede it in ``l_h``."""
    _check_cover(g, l_h)
    rank = l_h.rank
    cd = list(rank)
    for v in range(g.n):
        rv = rank[v]
        cd[v] -= sum(1 for w in g.neighbors(v) if rank[w] < rv)
    return cd


class CountdownState:
    """Countdown per vertex plus buckets of unemitted vertices by countdown value.

    Once ``processed`` vertices have been emitted, a countdown equals the
    number of unprocessed H-ancestors plus ``processed``.  Values therefore
    stay below ``2 n``, which bounds the bucket array.
    """

    __slots__ = ("countdown", "buckets", "processed")

    def __init__(self, countdown: list[int]):
        n = len(countdown)
        self.countdown = list(countdown)
        self.buckets = [set() for _ in range(2 * n + 1)]
        self.processed = 0
        for v, c in enumerate(self.countdown):
            if c < 0:
                raise Stall("negative initial countdown at vertex %d" % v)
            self.buckets[c].add(v)

    def take(self, i: int) -> set:
        """Remove and return the vertices whose countdown is exactly ``i``."""
        b = self.buckets[i]
        self.buckets[i] = set()
        return b

    def bump(self, v: int):
        c = self.countdown[v]
        self.buckets[c].remove(v)
        self.buckets[c + 1].add(v)
        self.countdown[v] = c + 1


def complement_merge(
    g: Digraph,
    l_h: LinearOrder,
    check: bool = False,
    linearization: LinearOrder | None = None,
    stats: dict | None = None,
) -> LinearOrder:
    """Linear order describing ``G_H`` together with the closure of H.

    ``g`` must be a transitive DAG and ``l_h`` describes the orientation H of
    its complement (a pair a-b is oriented a->b iff a precedes b in
    ``l_h``).  Transitivity is only verified when ``check`` is set, because
    the check costs O(n m).  On non-transitive input the unchecked path
    still returns a linear extension of H, but it need not describe any
    2-dimensional subgraph of ``g``.

    Ties are broken by ``linearization`` (default: the min-id topological
    order of ``g``); the result does not depend on this choice.  If a
    ``stats`` dict is passed it receives the pool push and countdown
    increment totals.
    """
    _check_cover(g, l_h)
    if check:
        witness = transitivity_witness(g)
        if witness is not None:
            names = g.vertices.names
            raise NotTransitive((names[witness[0]], names[witness[1]]))
    n = g.n
    l_g = topological_order(g) if linearization is None else linearization
    _check_cover(g, l_g)
    start = initial_countdown(g, l_h)
    state = CountdownState(start)
    pool = ReadyPool(l_g)
    emitted = [False] * n
    cd = state.countdown
    buckets = state.buckets
    nbrs = [g.neighbors(v) for v in range(n)]
    out = []
    for i in range(n):
        for v in state.take(i):
            pool.push(v)
        if not pool:
            raise Stall("no ready vertex at step %d" % i)
        s = pool.pop()
        emitted[s] = True
        out.append(s)
        state.processed = i + 1
        for v in nbrs[s]:
            c = cd[v]
            if c > i and not emitted[v]:
                # inlined CountdownState.bump
                buckets[c].remove(v)
                buckets[c + 1].add(v)
                cd[v] = c + 1
    if stats is not None:
        stats["pool_pushes"] = n
        stats["increments"] = sum(cd) - sum(start)
    return LinearOrder(out)
