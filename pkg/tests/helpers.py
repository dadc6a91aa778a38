"""Small label-level helpers shared by the test modules."""


def edges_of(g):
    return set(g.label_edges())


def pairs(*specs):
    """'AB', 'CD' -> {('A','B'), ('C','D')}"""
    return {(s[0], s[1]) for s in specs}


from hypothesis import strategies as st

from poset2d import Digraph, transitive_closure


@st.composite
def dags(draw, min_n=0, max_n=8):
    """Random DAG with labels v0.. whose hidden topological order is shuffled."""
    n = draw(st.integers(min_n, max_n))
    hidden = draw(st.permutations(range(n)))
    cand = [(hidden[i], hidden[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(cand), max_size=len(cand)))
    return Digraph.from_id_edges(["v%d" % i for i in range(n)], [e for e, c in zip(cand, chosen) if c])


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    cand = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.booleans(), min_size=len(cand), max_size=len(cand)))
    return Digraph.from_id_edges(["v%d" % i for i in range(n)], [e for e, c in zip(cand, chosen) if c])


@st.composite
def transitive_dags(draw, min_n=0, max_n=8):
    return transitive_closure(draw(dags(min_n, max_n)))


@st.composite
def graph_and_order(draw, graphs):
    g = draw(graphs)
    return g, draw(st.permutations(range(g.n)))
