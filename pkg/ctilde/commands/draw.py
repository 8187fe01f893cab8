"""draw: SVG strip diagram of a germ element."""

from __future__ import annotations

import argparse

from ctilde.commands import emit
from ctilde.errors import CycleSyntaxError
from ctilde.germ import parse_element
from ctilde.models import DrawingRecord, Invocation
from ctilde.periodic import Strip
from ctilde.render import draw


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("draw", parents=[parent], help="SVG strip diagram of an element")
    sub.add_argument("inputs", nargs=1, metavar="CYCLES")
    sub.add_argument("--period", type=int, default=None, help="period of a custom strip")
    sub.add_argument(
        "--x", default=None, help="comma-separated residues on the X line of a custom strip"
    )
    sub.set_defaults(handler=run_draw)


def strip_for(args: argparse.Namespace, n: int) -> Strip:
    if args.period is None and args.x is None:
        return Strip.ctilde(n)
    if args.period is None or args.x is None:
        raise CycleSyntaxError("--period and --x must be given together")
    try:
        residues = frozenset(int(token) for token in args.x.split(","))
        return Strip(args.period, residues)
    except ValueError as exc:
        raise CycleSyntaxError(f"bad strip --period {args.period} --x {args.x}: {exc}") from exc


def run_draw(invocation: Invocation, args: argparse.Namespace) -> int:
    x = parse_element(invocation.inputs[0], strip_for(args, invocation.n))
    svg = draw(x)
    emit(invocation, svg.rstrip("\n"), DrawingRecord(element=str(x), period=x.period, svg=svg))
    return 0
