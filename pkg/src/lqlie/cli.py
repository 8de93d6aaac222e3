"""Command line front end.

Exit codes: 0 on success, 1 when a library precondition fails, 2 on usage
errors (argparse's convention).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Dict, List, Optional

from . import brackets, embedding, hopfmaps
from .bimould import ari, beta
from .errors import DomainError
from .ncpoly import Alphabet, NcPoly, balanced_quasi_shuffle, gr_D, shuffle
from .parsing import parse_expr
from .spaces import basis, dim_table, is_in_lq, is_in_ls


def _to_dbi(p: NcPoly) -> NcPoly:
    return p if p.alphabet is Alphabet.DBI else hopfmaps.to_dbi(p)


def _via_dbi(fn: Callable[[NcPoly], NcPoly]) -> Callable[[NcPoly], NcPoly]:
    """Lift a Dbi-only map to B inputs by translating there and back."""

    def lifted(p: NcPoly) -> NcPoly:
        if p.alphabet is Alphabet.B:
            return hopfmaps.from_dbi(fn(hopfmaps.to_dbi(p)))
        return fn(p)

    return lifted


MAPS: Dict[str, Callable] = {
    "tau": hopfmaps.tau,
    "pi0": hopfmaps.pi0,
    "sec": hopfmaps.sec,
    "rho": hopfmaps.rho,
    "S": hopfmaps.antipode_S,
    "S0": hopfmaps.S0,
    "partial0": hopfmaps.partial0,
    "taudbi": _via_dbi(hopfmaps.tau_dbi),
    "delta": _via_dbi(brackets.delta),
    "grD": gr_D,
    "piY": embedding.piY,
    "thetaX": embedding.thetaX,
    "thetaY": embedding.thetaY,
    "theta": embedding.theta,
    "beta": lambda p: beta(_to_dbi(p)),
}


BRACKETS: Dict[str, Callable] = {
    "A": brackets.bracket_A,
    "ihara": brackets.ihara_bracket,
    "ari": lambda f, g: ari(beta(_to_dbi(f)), beta(_to_dbi(g))),
}


def _render(result, as_dbi: bool) -> str:
    """B results print in B unless ``--as dbi``; Dbi results follow the same rule."""
    if isinstance(result, NcPoly):
        if as_dbi and result.alphabet is Alphabet.B:
            result = hopfmaps.to_dbi(result)
        elif not as_dbi and result.alphabet is Alphabet.DBI:
            result = hopfmaps.from_dbi(result)
    return str(result)


def _keep_dbi(args, *inputs: NcPoly) -> bool:
    if args.as_ == "dbi":
        return True
    if args.as_ == "b":
        return False
    return all(p.alphabet is Alphabet.DBI for p in inputs)


def _cmd_product(args, out) -> None:
    f, g = parse_expr(args.P).poly, parse_expr(args.Q).poly
    if args.command == "shuffle":
        result = shuffle(f, g)
    else:
        if f.alphabet is Alphabet.DBI:
            f = hopfmaps.from_dbi(f)
        if g.alphabet is Alphabet.DBI:
            g = hopfmaps.from_dbi(g)
        result = balanced_quasi_shuffle(f, g)
    print(_render(result, args.as_ == "dbi"), file=out)


def _cmd_bracket(args, out) -> None:
    f, g = parse_expr(args.P).poly, parse_expr(args.Q).poly
    result = BRACKETS[args.type](f, g)
    print(_render(result, _keep_dbi(args, f, g)), file=out)


def _cmd_map(args, out) -> None:
    p = parse_expr(args.P).poly
    result = MAPS[args.name](p)
    print(_render(result, _keep_dbi(args, p)), file=out)


def _cmd_member(args, out) -> None:
    p = parse_expr(args.P).poly
    report = is_in_lq(p) if args.space == "lq" else is_in_ls(p)
    print(str(report), file=out)


def _cmd_basis(args, out) -> None:
    cell = basis(args.space, args.weight, args.depth)
    as_dbi = args.as_ == "dbi"
    print(f"dim {cell.dim}", file=out)
    for v in cell.basis:
        print(_render(v, as_dbi), file=out)


def _cmd_dims(args, out) -> None:
    table = dim_table(args.space, args.max_weight, args.max_depth)
    if args.format == "json":
        doc = {
            "space": args.space,
            "entries": [{"weight": k, "depth": d, "dim": n} for k, d, n in table],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "depth", "dim"])
        writer.writerows(table)
        out.write(buf.getvalue())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lqlie", description="Computations in the Lie algebras lq and ls."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_as(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument(
            "--as", dest="as_", choices=["b", "dbi"], default=None,
            help="print Dbi-expressible results in the B (default) or Dbi alphabet",
        )
        return p

    for name, help_text in [("shuffle", "shuffle product"), ("stuffle", "balanced quasi-shuffle product")]:
        p = with_as(sub.add_parser(name, help=help_text))
        p.add_argument("P")
        p.add_argument("Q")
        p.set_defaults(handler=_cmd_product)

    p = with_as(sub.add_parser("bracket", help="Lie brackets"))
    p.add_argument("--type", choices=sorted(BRACKETS), default="A")
    p.add_argument("P")
    p.add_argument("Q")
    p.set_defaults(handler=_cmd_bracket)

    p = with_as(sub.add_parser("map", help="apply a named map"))
    p.add_argument("--name", choices=list(MAPS), required=True)
    p.add_argument("P")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("member", help="membership in lq or ls")
    p.add_argument("--space", choices=["lq", "ls"], required=True)
    p.add_argument("P")
    p.set_defaults(handler=_cmd_member)

    p = with_as(sub.add_parser("basis", help="basis of one bigraded cell"))
    p.add_argument("--space", choices=["lq", "ls"], required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("dims", help="dimension table")
    p.add_argument("--space", choices=["lq", "ls"], required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(handler=_cmd_dims)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.handler(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
