"""Approximating transitive DAGs by 2-dimensional subgraphs."""

from .digraph import (
    Digraph,
    LinearOrder,
    Orientation,
    VertexTable,
    complement,
    condense,
    inverse,
    is_acyclic,
    is_oriented,
    is_transitive,
    is_undirected,
    orientation_from_order,
    topological_order,
    transitive_closure,
    undirected_closure,
)
from .errors import (
    CyclicInput,
    EdgeNotPresent,
    GraphError,
    IncompleteOrder,
    NotOrientable,
    NotSubgraph,
    NotTransitive,
    ParseError,
    Stall,
    TooLarge,
    UnknownVertex,
)
from .forcing import (
    ImplicationClasses,
    complement_orientation_order,
    forces,
    forcing_components,
    implication_classes,
    is_permutation_graph,
    is_transitively_orientable,
    transitive_orientation,
)
from .merge import complement_merge, initial_countdown, merge
from .twodim import TwoDimIndex, build_index, induced_subgraph, is_two_dimensional, reachable
from .approx import (
    SearchResult,
    enumerate_locally_maximal_2d,
    exhaustive_best,
    improve,
    local_search,
    tree_cover,
)

__version__ = "0.1.0"
