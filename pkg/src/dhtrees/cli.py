"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 size envelope exceeded, 3 internal
invariant failure (including a failing ``selftest``).
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import families
from .acceptance import run_all
from .ehrenborg import check_numeric, check_polynomial, search_counterexample
from .enumerator import Enumerator, compose, graph_enumerator
from .errors import EnvelopeExceeded, InvariantFailure
from .graph import Graph, bipartition, format_graph, graph_from_json, graph_to_json, parse_graph
from .linalg import tree_count
from .recognition import FORBIDDEN_MAX_VERTICES, find_forbidden, is_cograph, is_threshold, recognize_dh


def _read_graph(path: str, as_json: bool) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return graph_from_json(text) if as_json else parse_graph(text)


def _emit_graph(g: Graph, as_json: bool) -> None:
    print(graph_to_json(g) if as_json else format_graph(g), end="\n" if as_json else "")


def _emit_enumerator(e: Enumerator) -> None:
    print("# enumerator " + ("factored" if e.is_linear_product() else "with nonlinear factors"))
    print(e.serialize(), end="")
    print(f"# P = {e.pretty()}")


def cmd_count(args) -> int:
    print(tree_count(_read_graph(args.graph, args.json)))
    return 0


def cmd_enumerate(args) -> int:
    g = _read_graph(args.graph, args.json)
    if not g.is_connected():
        raise ValueError("enumerate needs a connected graph")
    e = graph_enumerator(g)
    _emit_enumerator(e)
    print(f"tau = {e.evaluate({v: 1 for v in g.vertices})}")
    return 0


def cmd_recognize(args) -> int:
    g = _read_graph(args.graph, args.json)
    if not g.is_connected():
        print("distance-hereditary: no (disconnected)")
    else:
        seq = recognize_dh(g)
        if seq:
            print("distance-hereditary: yes")
            print(seq.to_text(), end="")
        elif g.n <= FORBIDDEN_MAX_VERTICES:
            print(f"not distance-hereditary; witness: {find_forbidden(g)}")
        else:
            print(f"not distance-hereditary; irreducible core on {seq.reduced.n} vertices: "
                  + " ".join(map(str, seq.reduced.vertices)))
    cot = is_cograph(g)
    if cot:
        print(f"cograph: yes; cotree: {cot}")
    else:
        print(f"cograph: no; witness: P4({' '.join(map(str, cot.witness))})")
    print(f"threshold: {'yes' if is_threshold(g) else 'no'}")
    return 0


def cmd_compose(args) -> int:
    g1 = _read_graph(args.graph1, args.json)
    g2 = _read_graph(args.graph2, args.json)
    h, e, _ = compose(g1, args.v1, graph_enumerator(g1), g2, args.v2, graph_enumerator(g2))
    index = {v: i for i, v in enumerate(h.vertices)}
    _emit_graph(h.relabel(index), args.json)
    _emit_enumerator(e.relabel(index))
    return 0


FAMILIES = {
    "path": lambda a: families.path(*a),
    "cycle": lambda a: families.cycle(*a),
    "complete": lambda a: families.complete(*a),
    "complete-bipartite": lambda a: families.complete_bipartite(*a),
    "complete-multipartite": lambda a: families.complete_multipartite(a),
    "star": lambda a: families.star(*a),
    "wheel": lambda a: families.wheel(*a),
    "superprism": lambda a: families.superprism(*a),
    "ferrers": lambda a: families.ferrers_young(a)[0],
    "inversion": lambda a: families.inversion_graph(a),
    "gem": lambda a: families.gem(),
    "house": lambda a: families.house(),
    "domino": lambda a: families.domino(),
}


def cmd_family(args) -> int:
    if args.name == "threshold":
        g = families.threshold_graph(args.params)
    else:
        try:
            params = [int(p) for p in args.params]
        except ValueError:
            raise ValueError(f"family {args.name} takes integer parameters") from None
        try:
            g = FAMILIES[args.name](params)
        except TypeError:
            raise ValueError(f"wrong number of parameters for family {args.name}") from None
    if args.name == "inversion":
        # vertices are 1..n; shift to the 0-based file convention
        g = g.relabel({v: v - 1 for v in g.vertices})
    _emit_graph(g, args.json)
    return 0


def _parse_point(text: str, g: Graph) -> dict[int, Fraction]:
    vals = [Fraction(t) for t in text.split(",")]
    if len(vals) != g.n:
        raise ValueError(f"point needs {g.n} coordinates, got {len(vals)}")
    return dict(zip(g.vertices, vals))


def cmd_ehrenborg(args) -> int:
    print("# graph\tn\tm\tlhs\trhs\tratio\tholds")
    if args.graph is None:
        print(f"# seed {args.seed}")
        reports = search_counterexample((args.nmin, args.nmax), args.density, args.trials,
                                        args.seed, points=args.points, top=args.top)
    else:
        g = _read_graph(args.graph, args.json)
        cert = bipartition(g)
        if cert is None:
            raise ValueError("graph is not bipartite")
        reports = [check_numeric(g, cert)]
        for p in args.point or ():
            reports.append(check_polynomial(g, cert, _parse_point(p, g)))
    for r in reports:
        print(r.line())
        if not r.holds:
            print(f"COUNTEREXAMPLE to the Ehrenborg inequality: graph {r.graph}", file=sys.stderr)
    return 0


def cmd_selftest(args) -> int:
    results = run_all(args.seed, echo=lambda s: print(s, flush=True))
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dhtrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph file in the edge-list format, or - for stdin")
        p.add_argument("--json", action="store_true", help="read the JSON graph format")
        p.set_defaults(func=fn)
        return p

    graph_cmd("count", cmd_count, "number of spanning trees")
    graph_cmd("enumerate", cmd_enumerate, "vertex spanning enumerator")
    graph_cmd("recognize", cmd_recognize, "distance-hereditary / cograph / threshold tests")

    p = sub.add_parser("compose", help="glue two graphs at marked vertices")
    p.add_argument("graph1")
    p.add_argument("v1", type=int)
    p.add_argument("graph2")
    p.add_argument("v2", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("family", help="emit a named graph")
    p.add_argument("name", choices=sorted(FAMILIES) + ["threshold"])
    p.add_argument("params", nargs="*", help="sizes, parts, permutation, or i/d steps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ehrenborg", help="check or search the Ehrenborg inequality")
    p.add_argument("graph", nargs="?", help="bipartite graph to check; omit to run a random search")
    p.add_argument("--json", action="store_true")
    p.add_argument("--point", action="append", help="comma-separated rational coordinates")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--nmin", type=int, default=2)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--points", type=int, default=1, help="random points per sampled graph")
    p.add_argument("--top", type=int, default=20)
    p.set_defaults(func=cmd_ehrenborg)

    p = sub.add_parser("selftest", help="run every acceptance criterion")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EnvelopeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvariantFailure, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
