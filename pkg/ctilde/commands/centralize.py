"""centralize: compare the c^h-fixed sub-germ with the type-C dual germ."""

from __future__ import annotations

import argparse

from ctilde.centralizer import verify_centralizer_type
from ctilde.commands import emit, verdict
from ctilde.errors import WordSyntaxError
from ctilde.models import CentralizerRecord, Invocation


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser(
        "centralize", parents=[parent], help="exit 0 when the c^h-fixed sub-germ has type C_gcd(h,n)"
    )
    sub.add_argument("inputs", nargs=1, metavar="H")
    sub.set_defaults(handler=run_centralize)


def run_centralize(invocation: Invocation, args: argparse.Namespace) -> int:
    text = invocation.inputs[0]
    if not text.isdigit() or int(text) < 1:
        raise WordSyntaxError(f"h must be a positive integer, got {text!r}")
    report = verify_centralizer_type(int(text), invocation.n, invocation.window)
    lines = [
        f"h={report.h} n={report.n} d={report.d} window={report.window}",
        f"fixed divisors: {report.fixed_divisors}  atoms: {report.fixed_atoms}",
        f"type C_{report.d} divisors: {report.typec_divisors}  atoms: {report.typec_atoms}",
        f"lattices isomorphic: {verdict(report.lattice_isomorphic)}",
    ]
    emit(invocation, "\n".join(lines), CentralizerRecord.of(report))
    return 0 if report.matches else 1
