"""Command line entry point: ``qrw {width,solve,nec,verify,gen}``."""

from __future__ import annotations

import argparse
import sys

from .cutrank import CUT_FUNCTIONS, cutrank_gf2, cutrank_q
from .decomposition import (
    DecompositionParseError,
    enumerate_cuts,
    f_width,
    parse_decomposition,
    root_at_edge,
    serialize_decomposition,
    validate,
)
from .equivalence import nec_bound, nec_count
from .graph import GraphParseError, bits, format_edge_list, generate_family, parse_graph
from .problems import IntSet, catalog_lookup, degree_matrix_from_H, sigma_rho
from .search import DEFAULT_EXACT_CAP, decompose
from .solver import solve
from .sweeps import run_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc.strerror}") from None


def _load_graph(path: str, fmt: str):
    try:
        return parse_graph(_read(path), fmt)
    except GraphParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_decomp(path: str, graph):
    try:
        dec = parse_decomposition(_read(path), graph.n)
    except DecompositionParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    problems = validate(dec, graph)
    if problems:
        raise UsageError(f"{path}: {problems[0]}")
    return dec


def _fmt_set(mask: int) -> str:
    return ",".join(map(str, bits(mask)))


def cmd_width(args, out) -> int:
    graph = _load_graph(args.graph, args.format)
    f = CUT_FUNCTIONS[args.field]
    if args.decomp:
        dec = _load_decomp(args.decomp, graph)
        width, method, optimal = f_width(graph, dec, f), "given", False
    else:
        try:
            result = decompose(graph, f, args.method, args.seed, args.cap)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        dec, width, method, optimal = result.decomposition, result.width, result.method, result.optimal
    print(f"width={width} optimal={str(optimal).lower()} method={method} field={args.field}", file=out)
    if args.emit_decomp:
        with open(args.emit_decomp, "w") as fh:
            fh.write(serialize_decomposition(dec) + "\n")
    return EXIT_OK


def _problem_from_args(args):
    chosen = [args.problem is not None, args.sigma is not None or args.rho is not None, args.hgraph is not None]
    if sum(chosen) != 1:
        raise UsageError("give exactly one of --problem, --sigma/--rho, --hgraph")
    try:
        if args.problem is not None:
            spec = catalog_lookup(args.problem, args.param)
        elif args.hgraph is not None:
            spec = degree_matrix_from_H(_load_graph(args.hgraph, "auto"), args.variant)
        else:
            if args.sigma is None or args.rho is None:
                raise UsageError("--sigma and --rho go together")
            spec = sigma_rho(IntSet.parse(args.sigma), IntSet.parse(args.rho), "min", "custom")
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.objective:
        spec = spec.with_objective(args.objective)
    return spec


def cmd_solve(args, out) -> int:
    graph = _load_graph(args.graph, args.format)
    spec = _problem_from_args(args)
    if args.decomp:
        dec = _load_decomp(args.decomp, graph)
    else:
        dec = decompose(graph, cutrank_q, "auto", args.seed).decomposition
    sol = solve(graph, root_at_edge(dec), spec)
    if not sol.feasible:
        print("status=infeasible", file=out)
        return EXIT_OK
    if spec.kind == "sigma-rho":
        witness = _fmt_set(sol.parts[0])
    else:
        witness = "|".join(_fmt_set(p) for p in sol.parts)
    print(f"status=optimal value={sol.value} witness={witness}", file=out)
    return EXIT_OK


def cmd_nec(args, out) -> int:
    graph = _load_graph(args.graph, args.format)
    if args.d < 1:
        raise UsageError("-d must be at least 1")
    if args.decomp:
        dec = _load_decomp(args.decomp, graph)
    else:
        dec = decompose(graph, cutrank_q, "auto", args.seed).decomposition
    print("cut,size,cutrk_q,cutrk_gf2,nec_d,nec_d_complement,bound", file=out)
    for idx, side in enumerate(enumerate_cuts(dec)):
        k = cutrank_q(graph, side)
        row = [
            idx,
            side.bit_count(),
            k,
            cutrank_gf2(graph, side),
            nec_count(graph, side, args.d),
            nec_count(graph, graph.full & ~side, args.d),
            nec_bound(args.d, k),
        ]
        print(",".join(map(str, row)), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_all(quick=args.quick)
    for res in results:
        print(res.line(), file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_gen(args, out) -> int:
    params = {k: getattr(args, k) for k in ("n", "rows", "cols", "a", "b", "p") if getattr(args, k) is not None}
    try:
        graph = generate_family(args.family, seed=args.seed, **params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dimacs":
        edges = graph.edges()
        text = f"p edge {graph.n} {len(edges)}\n" + "".join(f"e {u + 1} {v + 1}\n" for u, v in edges)
    else:
        text = format_edge_list(graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrw", description="Q-rank-width and LC-VSP tools")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", required=True, help="graph file")
        p.add_argument("--format", default="auto", choices=["auto", "edge-list", "dimacs"])

    p = sub.add_parser("width", help="compute a decomposition and its width")
    graph_args(p)
    p.add_argument("--field", default="q", choices=["q", "gf2"])
    p.add_argument("--method", default="auto", choices=["auto", "exact", "greedy"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP, help="largest n for exact search")
    p.add_argument("--decomp", help="evaluate this decomposition instead of searching")
    p.add_argument("--emit-decomp", help="write the decomposition to this file")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("solve", help="solve an LC-VSP problem")
    graph_args(p)
    p.add_argument("--problem", help="catalog name, e.g. dominating-set or d-dominating-set:2")
    p.add_argument("--param", type=int, help="degree parameter for d-* catalog problems")
    p.add_argument("--sigma", help="sigma set, e.g. '{0}' or 'N\\{0}'")
    p.add_argument("--rho", help="rho set")
    p.add_argument("--hgraph", help="target graph H for homomorphism problems")
    p.add_argument("--variant", default="coloring",
                   choices=["coloring", "role-assignment", "covering", "partial-covering"])
    p.add_argument("--decomp")
    p.add_argument("--objective", choices=["min", "max", "feas"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("nec", help="per-cut class counts as CSV")
    graph_args(p)
    p.add_argument("--decomp")
    p.add_argument("-d", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_nec)

    p = sub.add_parser("verify", help="run the verification sweeps")
    p.add_argument("--quick", action="store_true", help="smaller corpora")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("--family", required=True,
                   choices=["path", "cycle", "complete", "empty", "star", "complete_bipartite",
                            "grid", "random_tree", "gnp"])
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="edge-list", choices=["edge-list", "dimacs"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
