"""Command-line interface.

Exit codes: 0 success, 2 bad input, 3 violated precondition (cycle, not
transitive, not orientable), 4 failed verification.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import approx, digraph, forcing, twodim
from .merge import complement_merge, merge
from .generate import random_two_dimensional
from .errors import (
    CyclicInput,
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
from .fileformats import format_edge_list, format_order, parse_edge_list, parse_order

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4


class CommandFailed(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CommandFailed(EXIT_INPUT, "cannot read %s: %s" % (path, exc.strerror)) from None
    except UnicodeDecodeError:
        raise CommandFailed(EXIT_INPUT, "%s is not valid UTF-8" % path) from None


def _graph(path, vertices=None):
    return parse_edge_list(_read(path), vertices)


def _order(path, g):
    return parse_order(_read(path), g.vertices)


def _stats(args, g, sub):
    if args.stats:
        print("kept=%d removed=%d" % (sub.m, g.m - sub.m), file=sys.stderr)


def cmd_closure(args):
    g = _graph(args.graph)
    if args.auto_condense and not digraph.is_acyclic(g):
        g, _ = digraph.condense(g)
    return format_edge_list(digraph.transitive_closure(g))


def cmd_condense(args):
    g, _ = digraph.condense(_graph(args.graph))
    return format_edge_list(g)


def cmd_orient_complement(args):
    g = _graph(args.graph)
    return format_order(forcing.complement_orientation_order(g), g.vertices)


def cmd_merge(args):
    g = _graph(args.graph)
    return format_order(merge(g, _order(args.order, g)), g.vertices)


def cmd_cmerge(args):
    g = _graph(args.graph)
    out = complement_merge(g, _order(args.order, g), check=args.check)
    return format_order(out, g.vertices)


def cmd_index(args):
    g = _graph(args.graph)
    return twodim.build_index(g, _order(args.order, g), check=args.check).dumps()


def cmd_query(args):
    idx = twodim.TwoDimIndex.loads(_read(args.index))
    answers = []
    for lineno, raw in enumerate(_read(args.pairs).splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("line %d: expected 'source target', got %r" % (lineno, raw))
        answers.append("1" if idx.reachable(*parts) else "0")
    return "".join(a + "\n" for a in answers)


def cmd_induced(args):
    g = _graph(args.graph)
    sub = twodim.induced_subgraph(g, _order(args.order, g))
    _stats(args, g, sub)
    return format_edge_list(sub)


def cmd_tree_cover(args):
    g = _graph(args.graph)
    sub = approx.tree_cover(g)
    _stats(args, g, sub)
    return format_edge_list(sub)


def cmd_improve(args):
    g = _graph(args.graph)
    s = _graph(args.subgraph, g.vertices)
    sub = approx.improve(g, s)
    _stats(args, g, sub)
    return format_edge_list(sub)


def cmd_search(args):
    g = _graph(args.graph)
    res = approx.local_search(g, budget=args.budget, seed=args.seed)
    _stats(args, g, res.best_subgraph)
    return format_edge_list(res.best_subgraph)


def _yes(flag):
    return "yes" if flag else "no"


def cmd_verify(args):
    g = _graph(args.graph)
    lines = []
    ok = True
    target = g
    if args.subgraph is not None:
        target = _graph(args.subgraph, g.vertices)
        inside = target.is_subgraph_of(g)
        lines.append("subgraph: %s" % _yes(inside))
        ok &= inside
    acyclic = digraph.is_acyclic(target)
    transitive = acyclic and digraph.is_transitive(target)
    lines.append("acyclic: %s" % _yes(acyclic))
    lines.append("transitive: %s" % _yes(transitive))
    if transitive:
        two_dim = twodim.is_two_dimensional(target)
        lines.append("2-dimensional: %s" % _yes(two_dim))
    else:
        two_dim = False
        lines.append("2-dimensional: n/a")
    ok &= acyclic and transitive and two_dim
    return "".join(line + "\n" for line in lines), EXIT_OK if ok else EXIT_VERIFY


def cmd_bench(args):
    rng = random.Random(args.seed)
    lines = ["n m seconds"]
    for n in args.sizes:
        g = random_two_dimensional(n, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        start = time.perf_counter()
        complement_merge(g, digraph.LinearOrder(perm))
        lines.append("%d %d %.4f" % (n, g.m, time.perf_counter() - start))
    return "".join(line + "\n" for line in lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="poset2d",
        description="2-dimensional approximation of transitive DAGs via complement orientations.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, *positional, flags=()):
        p = sub.add_parser(name, help=help)
        for arg in positional:
            if arg.endswith("?"):
                p.add_argument(arg[:-1], nargs="?")
            else:
                p.add_argument(arg)
        p.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
        if "check" in flags:
            p.add_argument("--check", action="store_true", help="verify the graph is transitive first")
        if "auto-condense" in flags:
            p.add_argument("--auto-condense", action="store_true", help="condense cyclic input first")
        if "stats" in flags:
            p.add_argument("--stats", action="store_true", help="print kept/removed counts to stderr")
        if "seed" in flags:
            p.add_argument("--seed", type=int, default=0)
        if "budget" in flags:
            p.add_argument("--budget", type=int, default=1000)
        p.set_defaults(func=func)
        return p

    add("closure", cmd_closure, "transitive closure", "graph", flags=("auto-condense",))
    add("condense", cmd_condense, "strongly connected component quotient", "graph")
    add("orient-complement", cmd_orient_complement, "order describing a transitive orientation of the complement", "graph")
    add("merge", cmd_merge, "merge a DAG with a complement orientation order", "graph", "order")
    add("cmerge", cmd_cmerge, "order describing G_H plus the closure of H", "graph", "order", flags=("check",))
    add("index", cmd_index, "build the two-order reachability index", "graph", "order", flags=("check",))
    add("query", cmd_query, "answer reachability queries against an index", "index", "pairs")
    add("induced", cmd_induced, "2-dimensional subgraph induced by an order", "graph", "order", flags=("stats",))
    add("tree-cover", cmd_tree_cover, "tree-cover baseline subgraph", "graph", flags=("stats",))
    add("improve", cmd_improve, "enlarge a 2-dimensional subgraph", "graph", "subgraph", flags=("stats",))
    add("search", cmd_search, "local search for a large 2-dimensional subgraph", "graph", flags=("stats", "seed", "budget"))
    add("verify", cmd_verify, "check transitivity, 2-dimensionality and inclusion", "graph", "subgraph?")
    bench = add("bench", cmd_bench, "time complement merge on random 2-dimensional orders", flags=("seed",))
    bench.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000])
    return parser


_EXIT_FOR = (
    (UnknownVertex, EXIT_INPUT),
    (IncompleteOrder, EXIT_INPUT),
    (ParseError, EXIT_INPUT),
    (TooLarge, EXIT_INPUT),
    (CyclicInput, EXIT_PRECONDITION),
    (NotTransitive, EXIT_PRECONDITION),
    (NotOrientable, EXIT_PRECONDITION),
    (NotSubgraph, EXIT_PRECONDITION),
    (Stall, EXIT_PRECONDITION),
    (GraphError, EXIT_INPUT),
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
        code = EXIT_OK
        if isinstance(text, tuple):
            text, code = text
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except CommandFailed as exc:
        print("poset2d: %s" % exc, file=sys.stderr)
        return exc.code
    except GraphError as exc:
        code = next(c for cls, c in _EXIT_FOR if isinstance(exc, cls))
        print("poset2d: error: %s" % exc, file=sys.stderr)
        if isinstance(exc, Stall):
            print("poset2d: hint: is the graph transitive? rerun with --check", file=sys.stderr)
        return code
    return code


if __name__ == "__main__":
    sys.exit(main())
