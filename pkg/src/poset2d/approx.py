"""Finding large 2-dimensional subgraphs of a transitive DAG.

Every permutation of the vertices orients the complement of ``g`` and
thereby induces a 2-dimensional subgraph.  Local search, the exhaustive
scan and the tree-cover improvement all work in terms of such permutations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .digraph import (
    Digraph,
    LinearOrder,
    complement,
    is_acyclic,
    topological_order,
    transitive_closure,
    transitivity_witness,
)
from .errors import CyclicInput, NotSubgraph, NotTransitive, TooLarge
from .forcing import complement_orientation_order, is_transitively_orientable
from .twodim import build_index, induced_subgraph

MAX_EXHAUSTIVE_N = 9
MAX_ENUMERATE_N = 5
MAX_ENUMERATE_M = 12


def _require_transitive_dag(g: Digraph):
    if not is_acyclic(g):
        raise CyclicInput()
    w = transitivity_witness(g)
    if w is not None:
        names = g.vertices.names
        raise NotTransitive((names[w[0]], names[w[1]]))


@dataclass(frozen=True)
class SearchResult:
    best_order: LinearOrder
    best_subgraph: Digraph
    kept_edges: int
    removed_edges: int
    iterations: int


def kept_edges(g: Digraph, order: LinearOrder) -> int:
    """Number of edges of ``g`` kept by the subgraph the order induces."""
    idx = build_index(g, order)
    r1, r2 = idx.order1.rank, idx.order2.rank
    return sum(1 for u, v in g.edges() if r1[u] < r1[v] and r2[u] < r2[v])


def _result(g, order, iterations):
    sub = induced_subgraph(g, order)
    return SearchResult(order, sub, sub.m, g.m - sub.m, iterations)


def tree_cover(g: Digraph) -> Digraph:
    """Transitive closure of a spanning forest of the covering relation of ``g``.

    Each vertex keeps a single tree parent: the immediate predecessor with
    the most descendants, ties going to the smaller id.
    """
    _require_transitive_dag(g)
    out_sets = g.out_sets()
    forest = []
    for v in range(g.n):
        preds = g.in_adj[v]
        pred_set = frozenset(preds)
        best = None
        for p in preds:
            if out_sets[p].isdisjoint(pred_set):
                if best is None or len(g.out_adj[p]) > len(g.out_adj[best]):
                    best = p
        if best is not None:
            forest.append((best, v))
    return transitive_closure(g.with_edges(forest))


def improve(g: Digraph, s: Digraph) -> Digraph:
    """Enlarge a 2-dimensional transitive subgraph ``s`` of ``g``.

    A transitive orientation of the complement of ``s``, restricted to the
    complement of ``g``, induces a 2-dimensional subgraph containing ``s``.
    """
    if not s.is_subgraph_of(g):
        raise NotSubgraph("second graph is not a subgraph of the first")
    _require_transitive_dag(g)
    _require_transitive_dag(s)
    return induced_subgraph(g, complement_orientation_order(s))


def local_search(g: Digraph, budget: int = 1000, seed: int = 0) -> SearchResult:
    """Hill climbing over complement orders, maximising the kept edge count.

    Starts from the topological order of ``g``.  Moves are adjacent
    transpositions and vertex reinsertions, and only strict improvements are
    accepted.  After ``2 n^2`` consecutive failed moves the walk restarts
    from a random permutation.  ``budget`` caps the number of evaluated
    moves.
    """
    _require_transitive_dag(g)
    n = g.n
    rng = random.Random(seed)
    cur = list(topological_order(g).perm)
    cur_score = kept_edges(g, LinearOrder(cur))
    best, best_score = list(cur), cur_score
    patience = 2 * n * n
    stale = 0
    it = 0
    while it < budget and best_score < g.m and n > 1:
        it += 1
        cand = list(cur)
        if rng.random() < 0.5:
            p = rng.randrange(n - 1)
            cand[p], cand[p + 1] = cand[p + 1], cand[p]
        else:
            v = cand.pop(rng.randrange(n))
            cand.insert(rng.randrange(n), v)
        score = kept_edges(g, LinearOrder(cand))
        if score > cur_score:
            cur, cur_score, stale = cand, score, 0
            if score > best_score:
                best, best_score = list(cand), score
        else:
            stale += 1
            if stale >= patience:
                rng.shuffle(cur)
                cur_score = kept_edges(g, LinearOrder(cur))
                stale = 0
                it += 1
                if cur_score > best_score:
                    best, best_score = list(cur), cur_score
    return _result(g, LinearOrder(best), it)


def exhaustive_best(g: Digraph) -> SearchResult:
    """Best complement order over all n! permutations (lexicographically least on ties)."""
    if g.n > MAX_EXHAUSTIVE_N:
        raise TooLarge("exhaustive search needs n <= %d, got %d" % (MAX_EXHAUSTIVE_N, g.n))
    _require_transitive_dag(g)
    best, best_score = None, -1
    count = 0
    for perm in itertools.permutations(range(g.n)):
        count += 1
        score = kept_edges(g, LinearOrder(perm))
        if score > best_score:
            best, best_score = perm, score
            if score == g.m:
                break
    return _result(g, LinearOrder(best), count)


def _subset_is_transitive(edges, bits_of):
    out = {}
    for u, v in edges:
        out[u] = out.get(u, 0) | bits_of[v]
    for u, v in edges:
        if out.get(v, 0) & ~out[u] & ~bits_of[u]:
            return False
    return True


def enumerate_locally_maximal_2d(g: Digraph) -> set[frozenset]:
    """All inclusion-maximal transitive 2-dimensional edge subsets of ``g``.

    Subsets are enumerated from the largest downwards, so a candidate
    contained in an already accepted subset is skipped without testing.
    """
    if g.n > MAX_ENUMERATE_N or g.m > MAX_ENUMERATE_M:
        raise TooLarge(
            "enumeration needs n <= %d and m <= %d" % (MAX_ENUMERATE_N, MAX_ENUMERATE_M)
        )
    _require_transitive_dag(g)
    edges = list(g.edges())
    bits_of = [1 << v for v in range(g.n)]
    found = []
    for size in range(len(edges), -1, -1):
        for combo in itertools.combinations(edges, size):
            cand = frozenset(combo)
            if any(cand < f for f in found):
                continue
            if not _subset_is_transitive(combo, bits_of):
                continue
            if is_transitively_orientable(complement(g.with_edges(combo))):
                found.append(cand)
    return set(found)

