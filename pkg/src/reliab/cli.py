"""Command-line front end.

Every number printed is an exact rational ``a/b`` (or an integer).
Polynomials are printed as space-separated coefficients, lowest degree first.

Exit codes: 0 success, 1 bad input, 2 an evaluator cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from reliab.config import BRUTE_CAP_ENV, CapExceededError
from reliab.evaluators import (
    METHODS,
    EvalStrategy,
    count_connected_spanning,
    rel_individual,
    rel_point,
    spanning_trees,
    zrel_coeffs_direct,
)
from reliab.graph import Graph, GraphFormatError, format_rational, load_graph, parse_rational, serialize_graph
from reliab.harness import recover_rel_coeffs
from reliab.poly import zpoly_to_relpoly
from reliab.transforms import BounceSeq, bounce_family, bounce_graph, bounce_shift, inflate, stretch_gadget, thicken_gadget

EPILOG = (
    "Polynomials are printed lowest degree first: 'c0 c1 ... cd'. "
    f"Set {BRUTE_CAP_ENV} to change the brute-force edge cap (default 24)."
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise InputError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bounce(text: str) -> BounceSeq:
    try:
        return BounceSeq.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reliab", description="Exact all-terminal reliability toolkit.", epilog=EPILOG)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_arg(p):
        p.add_argument("-g", "--graph", required=True, help="graph file ('n m' header, then 'u v [a/b]' lines)")

    def strategy_args(p):
        p.add_argument("--strategy", choices=METHODS, default="del_contr")
        p.add_argument("--no-sp", action="store_true", help="skip series-parallel preprocessing")

    p = sub.add_parser("eval", help="reliability R(G;p) at edge failure probability p", epilog=EPILOG)
    graph_arg(p)
    p.add_argument("-p", type=_rational, required=True)
    strategy_args(p)

    p = sub.add_parser("eval-weighted", help="reliability with per-edge failure probabilities from the weight column")
    graph_arg(p)
    strategy_args(p)

    p = sub.add_parser("coeffs", help="coefficients of Zrel(G;w) or R(G;p)", epilog=EPILOG)
    graph_arg(p)
    p.add_argument("--basis", choices=("w", "p"), default="w")

    p = sub.add_parser("count", help="number of connected spanning subgraphs")
    graph_arg(p)
    strategy_args(p)

    p = sub.add_parser("trees", help="number of spanning trees")
    graph_arg(p)

    p = sub.add_parser("inflate", help="replace every edge by a gadget")
    graph_arg(p)
    gadget = p.add_mutually_exclusive_group(required=True)
    gadget.add_argument("--bounce", type=_bounce, help="bounce sequence, e.g. 3,2,3,2")
    gadget.add_argument("--stretch", type=_positive, metavar="K")
    gadget.add_argument("--thicken", type=_positive, metavar="K")
    p.add_argument("--weight", type=_rational, default=Fraction(1), help="edge weight inside the gadget")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("shift", help="bounce weight shift w_S and prefactor C_S")
    p.add_argument("--bounce", type=_bounce, required=True)
    p.add_argument("--w", type=_rational, required=True)

    p = sub.add_parser("family", help="bounce family for m edges with its shifted weights")
    p.add_argument("-m", type=_positive, required=True)
    p.add_argument("--w", type=_rational, default=Fraction(7))

    p = sub.add_parser("reduce-demo", help="recover R(G;p) from evaluations at p only (JSON report)", epilog=EPILOG)
    graph_arg(p)
    p.add_argument("-p", type=_rational, required=True)
    strategy_args(p)
    p.add_argument("--workers", type=_positive, default=1)
    return parser


def _strategy(args) -> EvalStrategy:
    return EvalStrategy(args.strategy, not args.no_sp)


def _run(args, out) -> None:
    cmd = args.command
    if cmd in ("shift", "family"):
        if cmd == "shift":
            s = bounce_shift(args.bounce, args.w)
            print(f"w_S = {format_rational(s.new_weight)}, C_S = {format_rational(s.prefactor)}", file=out)
        else:
            for seq in bounce_family(args.m):
                s = bounce_shift(seq, args.w)
                print(f"{seq}\tw_S = {format_rational(s.new_weight)}\tC_S = {format_rational(s.prefactor)}", file=out)
        return

    g: Graph = load_graph(args.graph)
    if cmd == "eval":
        print(format_rational(rel_point(g, args.p, _strategy(args))), file=out)
    elif cmd == "eval-weighted":
        print(format_rational(rel_individual(g.with_constant_weight(1), g.weights, _strategy(args))), file=out)
    elif cmd == "coeffs":
        poly = zrel_coeffs_direct(g)
        if args.basis == "p":
            poly = zpoly_to_relpoly(poly, g.m)
        print(poly.to_text(), file=out)
    elif cmd == "count":
        print(count_connected_spanning(g, _strategy(args)), file=out)
    elif cmd == "trees":
        print(spanning_trees(g), file=out)
    elif cmd == "inflate":
        if args.bounce is not None:
            h = bounce_graph(args.bounce, args.weight)
        elif args.stretch is not None:
            h = stretch_gadget(args.stretch, args.weight)
        else:
            h = thicken_gadget(args.thicken, args.weight)
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize_graph(inflate(g, h)))
    elif cmd == "reduce-demo":
        report = recover_rel_coeffs(g, args.p, _strategy(args), workers=args.workers, graph_id=args.graph)
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        _run(args, out)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, GraphFormatError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
