"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Base class for every error raised by poset2d."""


class ParseError(GraphError):
    pass


class CyclicInput(GraphError):
    def __init__(self, message="graph contains a directed cycle"):
        super().__init__(message)


class NotTransitive(GraphError):
    def __init__(self, witness=None):
        self.witness = witness
        message = "graph is not transitive"
        if witness is not None:
            message += " (missing %s -> %s)" % witness
        super().__init__(message)


class NotOrientable(GraphError):
    pass


class UnknownVertex(GraphError, KeyError):
    def __init__(self, label):
        self.label = label
        super().__init__("unknown vertex %r" % (label,))

    def __str__(self):
        return self.args[0]


class IncompleteOrder(GraphError):
    pass


class EdgeNotPresent(GraphError):
    pass


class Stall(GraphError):
    """Internal error: complement merge ran out of ready vertices."""


class TooLarge(GraphError):
    pass


class NotSubgraph(GraphError):
    pass
