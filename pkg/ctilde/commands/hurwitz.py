"""hurwitz: reduced decompositions of an element and their Hurwitz orbit."""

from __future__ import annotations

import argparse

from ctilde.commands import element, emit, verdict
from ctilde.hurwitz import reduced_decompositions, transitive_within_window
from ctilde.models import HurwitzRecord, Invocation


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser(
        "hurwitz", parents=[parent], help="reduced reflection decompositions and their orbit"
    )
    sub.add_argument("inputs", nargs=1, metavar="CYCLES")
    sub.add_argument("--cap", type=int, default=None, help="stop the orbit search after this many tuples")
    sub.add_argument(
        "--search-window",
        type=int,
        default=None,
        help="largest span of reflections visited by the orbit search (default: K + 2)",
    )
    sub.set_defaults(handler=run_hurwitz)


def run_hurwitz(invocation: Invocation, args: argparse.Namespace) -> int:
    x = element(invocation.inputs[0], invocation.n)
    search_window = args.search_window or invocation.window + 2
    found = reduced_decompositions(x, invocation.window)
    report = transitive_within_window(
        x, invocation.window, search_window, cap=invocation.cap
    )
    lines = [
        f"# window={invocation.window} search_window={search_window} "
        f"complete={verdict(found.complete)} count={len(found)}",
    ]
    lines.extend(str(t) for t in found)
    lines.append(
        f"reached {report.reached} of {report.targets}"
        + (" (truncated)" if report.truncated else "")
    )
    record = HurwitzRecord(
        element=str(x),
        window=invocation.window,
        search_window=search_window,
        complete=found.complete,
        decompositions=[[str(rho) for rho in t.entries] for t in found],
        targets=report.targets,
        reached=report.reached,
        cap=invocation.cap,
        truncated=report.truncated,
        transitive=report.transitive,
    )
    emit(invocation, "\n".join(lines), record)
    return 0
