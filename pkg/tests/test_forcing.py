import pytest
from hypothesis import given, settings, strategies as st

from helpers import dags, digraphs, pairs
from oracles import has_transitive_orientation
from poset2d import (
    Digraph,
    EdgeNotPresent,
    GraphError,
    NotOrientable,
    complement,
    complement_orientation_order,
    forces,
    forcing_components,
    implication_classes,
    is_acyclic,
    is_oriented,
    is_permutation_graph,
    is_transitive,
    is_transitively_orientable,
    orientation_from_order,
    transitive_closure,
    transitive_orientation,
    undirected_closure,
)


def undirected(edges, names=None):
    return undirected_closure(Digraph.from_edges(edges, names))


def cycle(n):
    return undirected([("c%d" % i, "c%d" % ((i + 1) % n)) for i in range(n)])


def ids(g, *labels):
    return tuple(g.lookup(x) for x in labels)


def test_forces_example(tc_p1):
    c = complement(tc_p1)
    assert forces(c, ids(c, "E", "F"), ids(c, "E", "D"))
    assert forces(c, ids(c, "E", "D"), ids(c, "B", "D"))
    assert forces(c, ids(c, "E", "D"), ids(c, "E", "D"))
    # B-C and B-D share tail B but C, D are adjacent
    assert not forces(c, ids(c, "B", "C"), ids(c, "B", "D"))
    # opposite directions never force
    assert not forces(c, ids(c, "E", "F"), ids(c, "D", "E"))


def test_forces_requires_edges(tc_p1):
    c = complement(tc_p1)
    with pytest.raises(EdgeNotPresent):
        forces(c, ids(c, "A", "B"), ids(c, "E", "D"))


def test_implication_classes_example(tc_p1):
    c = complement(tc_p1)
    classes = implication_classes(c).labelled(c)
    assert classes == [{"BC"}, {"BD", "BF", "CD", "CF", "DE", "EF"}]


def test_implication_classes_triangle_and_path():
    tri = undirected([("a", "b"), ("b", "c"), ("a", "c")])
    assert len(implication_classes(tri)) == 3
    path = undirected([("a", "b"), ("b", "c")])
    assert implication_classes(path).labelled(path) == [{"ab", "bc"}]


def test_implication_classes_require_undirected(p1):
    with pytest.raises(GraphError):
        implication_classes(p1)


def test_transitive_orientation_example(tc_p1):
    o = transitive_orientation(complement(tc_p1))
    assert set(o.label_edges()) == pairs("BC", "BD", "BF", "CD", "CF", "ED", "EF")


def test_odd_cycle_not_orientable():
    c5 = cycle(5)
    pairs5 = [(u, v) for u, v in c5.edges() if u < v]
    assert not has_transitive_orientation(5, pairs5)
    with pytest.raises(NotOrientable):
        transitive_orientation(c5)
    assert not is_transitively_orientable(c5)
    assert not is_permutation_graph(c5)


def test_edgeless():
    g = Digraph(["a", "b", "c"], [[], [], []])
    assert len(transitive_orientation(g)) == 0


def test_permutation_graphs(tc_p1):
    assert is_permutation_graph(undirected_closure(tc_p1))
    k4 = undirected([(a, b) for a in "abcd" for b in "abcd" if a < b])
    assert is_permutation_graph(k4)


def test_complement_orientation_order_tc_p1(tc_p1):
    order = complement_orientation_order(tc_p1)
    h = orientation_from_order(complement(tc_p1), order)
    assert set(h.label_edges()) == pairs("BC", "BD", "BF", "CD", "CF", "ED", "EF")


def test_complement_orientation_order_complete_dag():
    chain = transitive_closure(Digraph.from_edges([("a", "b"), ("b", "c"), ("c", "d")]))
    order = complement_orientation_order(chain)
    assert sorted(order.perm) == [0, 1, 2, 3]


def test_complement_orientation_order_tree(tree_t):
    order = complement_orientation_order(tree_t)
    h = orientation_from_order(complement(tree_t), order)
    assert set(h.label_edges()) == pairs(
        "BC", "BD", "BG", "CD", "CG", "EC", "ED", "EF", "EG", "FC", "FD", "FG"
    )


def test_complement_orientation_order_not_orientable():
    from poset2d.generate import standard_example

    with pytest.raises(NotOrientable):
        complement_orientation_order(standard_example(3))


@st.composite
def undirected_graphs(draw, max_n=7):
    return undirected_closure(draw(digraphs(max_n)))


@given(undirected_graphs())
def test_soundness(g):
    try:
        o = transitive_orientation(g)
    except NotOrientable:
        return
    d = o.as_digraph()
    assert is_transitive(d) and is_oriented(d) and is_acyclic(d)
    assert set(o.edges) | set(o.inverse().edges) == g.edge_set()


@settings(max_examples=300, deadline=None)
@given(undirected_graphs(max_n=7))
def test_completeness_against_enumeration(g):
    pairs_g = [(u, v) for u, v in g.edges() if u < v]
    assert is_transitively_orientable(g) == has_transitive_orientation(g.n, pairs_g)


@given(undirected_graphs())
def test_classes_partition_edges(g):
    ic = implication_classes(g)
    pairs_g = {(u, v) for u, v in g.edges() if u < v}
    assert set(ic.class_of) == pairs_g
    assert sum(len(c) for c in ic.classes) == len(pairs_g)
    comp = forcing_components(g)
    for (u, v), k in comp.items():
        for (x, y), j in comp.items():
            if j == k:
                assert ic.same_class((u, v), (x, y))


@settings(deadline=None)
@given(dags(max_n=8))
def test_forcing_in_closure_complement_implies_forcing_in_complement(g):
    tc = transitive_closure(g)
    inner = forcing_components(complement(tc))
    outer = forcing_components(complement(g))
    for e, k in inner.items():
        for f, j in inner.items():
            if j == k:
                assert outer[e] == outer[f]


@settings(deadline=None)
@given(digraphs(max_n=7))
def test_complement_order_round_trip(g):
    try:
        order = complement_orientation_order(g)
    except NotOrientable:
        return
    h = orientation_from_order(complement(g), order)
    assert is_transitive(h.as_digraph())
    assert h.edges == transitive_orientation(complement(g)).edges
