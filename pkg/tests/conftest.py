import pytest

from poset2d import Digraph, transitive_closure

# Example DAG whose closure adds A->E and A->F.
P1_EDGES = [("A", "B"), ("A", "C"), ("A", "D"), ("B", "E"), ("C", "E"), ("D", "F")]
# Transitive but not 2-dimensional; the complement order BEACDF drops only A->D.
P2_EDGES = [
    ("A", "B"), ("A", "D"), ("A", "E"), ("A", "F"),
    ("B", "E"), ("C", "E"), ("C", "F"), ("D", "F"),
]
# Seven-vertex graph used with a tree cover.
P3_EDGES = [
    ("A", "B"), ("A", "C"), ("A", "D"), ("B", "E"), ("B", "F"),
    ("C", "E"), ("C", "G"), ("D", "F"), ("D", "G"),
]
TREE_EDGES = [("A", "B"), ("A", "C"), ("A", "D"), ("B", "E"), ("B", "F"), ("D", "G")]


@pytest.fixture
def p1():
    return Digraph.from_edges(P1_EDGES, "ABCDEF")


@pytest.fixture
def tc_p1(p1):
    return transitive_closure(p1)


@pytest.fixture
def p2():
    return Digraph.from_edges(P2_EDGES, "ABCDEF")


@pytest.fixture
def tc_p3():
    return transitive_closure(Digraph.from_edges(P3_EDGES, "ABCDEFG"))


@pytest.fixture
def tree_t(tc_p3):
    return transitive_closure(Digraph.from_edges(TREE_EDGES, tc_p3.vertices))



def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
