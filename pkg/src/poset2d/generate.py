"""Random and named test graphs."""

from __future__ import annotations

import random

from .digraph import Digraph, transitive_closure


def _labels(n):
    return ["v%d" % i for i in range(n)]


def random_dag(n: int, p: float, rng: random.Random) -> Digraph:
    """Random DAG: each pair i<j of a hidden random order gets an edge with probability p."""
    hidden = list(range(n))
    rng.shuffle(hidden)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[hidden[i]].append(hidden[j])
    return Digraph(_labels(n), adj)


def random_transitive_dag(n: int, p: float, rng: random.Random) -> Digraph:
    return transitive_closure(random_dag(n, p, rng))


def random_two_dimensional(n: int, rng: random.Random) -> Digraph:
    """Intersection of two uniformly random linear orders on ``n`` vertices."""
    r1 = list(range(n))
    r2 = list(range(n))
    rng.shuffle(r1)
    rng.shuffle(r2)
    adj = []
    for u in range(n):
        a1, a2 = r1[u], r2[u]
        adj.append([v for v in range(n) if r1[v] > a1 and r2[v] > a2])
    return Digraph(_labels(n), adj)


def standard_example(k: int) -> Digraph:
    """The k-dimensional standard example: a_i < b_j iff i != j."""
    names = ["a%d" % i for i in range(k)] + ["b%d" % j for j in range(k)]
    edges = [("a%d" % i, "b%d" % j) for i in range(k) for j in range(k) if i != j]
    return Digraph.from_edges(edges, names)


def chain(n: int) -> Digraph:
    return transitive_closure(Digraph(_labels(n), [[i + 1] if i + 1 < n else [] for i in range(n)]))
