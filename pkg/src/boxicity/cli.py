"""Command-line interface: gen, construct, verify, exact.

Exit codes: 0 success, 1 verification failed or negative answer, 2 input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from boxicity import io as bio
from boxicity.boxes import verify
from boxicity.construction import ConstructOptions, construct_box_representation
from boxicity.exact import BudgetExceededError, OracleBudget, exact_boxicity
from boxicity.graphs import (
    Graph,
    cocktail_party,
    complete,
    complete_multipartite,
    cycle,
    max_degree,
    path,
    random_bounded_degree,
)

__all__ = ["RunReport", "main"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunReport:
    """Summary of one construction run."""

    n: int
    m: int
    delta: int
    colors: int
    dimension_raw: int
    dimension: int
    bound: int
    verified: bool
    seconds: float

    def as_text(self) -> str:
        status = "ok" if self.verified else "FAILED"
        return "\n".join(
            [
                f"vertices: {self.n}",
                f"edges: {self.m}",
                f"max_degree: {self.delta}",
                f"colors: {self.colors}",
                f"dimension_raw: {self.dimension_raw}",
                f"dimension: {self.dimension}",
                f"dimension_bound: {self.bound}",
                f"verification: {status}",
                f"seconds: {self.seconds:.3f}",
            ]
        )


def _read_graph_file(path_str: str) -> Graph:
    text = Path(path_str).read_text(encoding="ascii")
    return bio.read_graph(text)


def _write_output(path_str: str | None, text: str) -> None:
    if path_str is None or path_str == "-":
        sys.stdout.write(text)
    else:
        Path(path_str).write_text(text, encoding="ascii")


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    try:
        if family == "path":
            g = path(_one_param(params))
        elif family == "cycle":
            g = cycle(_one_param(params))
        elif family == "complete":
            g = complete(_one_param(params))
        elif family == "cocktail":
            g = cocktail_party(_one_param(params))
        elif family == "multipartite":
            if not params:
                raise ValueError("multipartite needs at least one part size")
            g = complete_multipartite(params)
        elif family == "random":
            if len(params) != 2:
                raise ValueError("random needs two parameters: n dmax")
            g = random_bounded_degree(params[0], params[1], args.seed)
        else:
            raise ValueError(f"unknown family {family!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write_output(args.output, bio.write_edge_list(g))
    return EXIT_OK


def _one_param(params: list[int]) -> int:
    if len(params) != 1:
        raise ValueError("family takes exactly one parameter")
    return params[0]


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        g = _read_graph_file(args.graph)
    except (OSError, bio.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    start = time.perf_counter()
    options = ConstructOptions(
        order=args.order, prune=not args.no_prune, trace="slim"
    )
    rep, trace = construct_box_representation(g, options)
    result = verify(g, rep)
    elapsed = time.perf_counter() - start

    delta = max_degree(g)
    report = RunReport(
        n=g.n,
        m=g.m,
        delta=delta,
        colors=trace.k,
        dimension_raw=2 * trace.k,
        dimension=rep.d,
        bound=2 * delta * delta + 2,
        verified=result.ok,
        seconds=elapsed,
    )
    _write_output(args.output, bio.write_representation(rep))
    print(report.as_text())
    if args.trace:
        for i, vi in enumerate(trace.classes):
            print(f"class {i + 1}: size {len(vi)} vertices {sorted(vi)}")
    if args.svg:
        if rep.d <= 2:
            Path(args.svg).write_text(bio.render_svg(rep), encoding="ascii")
        else:
            print(f"svg skipped: dimension {rep.d} > 2", file=sys.stderr)
    if not result.ok:
        print(f"internal verification failed at pair {result.pair}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _read_graph_file(args.graph)
        rep = bio.parse_representation(Path(args.representation).read_text(encoding="ascii"))
        result = verify(g, rep)
    except (OSError, bio.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if result.ok:
        print("ok")
        return EXIT_OK
    u, v = result.pair
    kind = "edge missing" if g.has_edge(u, v) else "non-edge present"
    print(f"mismatch at pair ({u}, {v}): {kind}")
    for j, overlaps in enumerate(result.per_dimension):
        print(f"dimension {j}: {'overlap' if overlaps else 'disjoint'}")
    return EXIT_FAIL


def cmd_exact(args: argparse.Namespace) -> int:
    try:
        g = _read_graph_file(args.graph)
    except (OSError, bio.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    budget = OracleBudget(
        max_n=args.max_n, max_k=args.max_k, max_supergraphs=args.budget
    )
    try:
        value, witness = exact_boxicity(g, budget)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"boxicity: {value}")
    if value == 0:
        print("note: complete graph; 0 by the empty-intersection convention")
    if args.witness:
        from boxicity.boxes import BoxRepresentation

        _write_output(args.witness, bio.write_representation(BoxRepresentation(g.n, witness)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxicity",
        description="Construct, verify, and measure axis-parallel box representations of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph family as an edge list")
    p_gen.add_argument(
        "family",
        choices=["path", "cycle", "complete", "multipartite", "cocktail", "random"],
    )
    p_gen.add_argument("params", nargs="*", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_con = sub.add_parser("construct", help="build and verify a box representation")
    p_con.add_argument("graph", help="edge-list or DIMACS .col file")
    p_con.add_argument("-o", "--output", default=None, help="representation file (default stdout)")
    p_con.add_argument("--order", choices=["index", "smallest-last"], default="index")
    p_con.add_argument("--no-prune", action="store_true")
    p_con.add_argument("--trace", action="store_true", help="print per-class detail")
    p_con.add_argument("--svg", default=None, help="write an SVG plot (d <= 2 only)")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="check a representation file against a graph")
    p_ver.add_argument("graph")
    p_ver.add_argument("representation")
    p_ver.set_defaults(func=cmd_verify)

    p_ex = sub.add_parser("exact", help="exact boxicity of a small graph")
    p_ex.add_argument("graph")
    p_ex.add_argument("--max-k", type=int, default=8)
    p_ex.add_argument("--max-n", type=int, default=8)
    p_ex.add_argument("--budget", type=int, default=1 << 18, help="supergraph enumeration cap")
    p_ex.add_argument("-w", "--witness", default=None, help="write the witness representation here")
    p_ex.set_defaults(func=cmd_exact)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
