"""lcm, gcd and divides on sigma-fixed germ elements."""

from __future__ import annotations

import argparse

from ctilde.commands import element, emit, verdict
from ctilde.germ import divides, gcd, lcm
from ctilde.models import BooleanRecord, ElementRecord, Invocation


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    for name, handler, summary in (
        ("lcm", run_lcm, "least common multiple of two divisors of c"),
        ("gcd", run_gcd, "greatest common divisor of two divisors of c"),
        ("divides", run_divides, "is the first element a left divisor of the second"),
    ):
        sub = subparsers.add_parser(name, parents=[parent], help=summary)
        sub.add_argument("inputs", nargs=2, metavar="CYCLES")
        sub.set_defaults(handler=handler)


def run_lcm(invocation: Invocation, args: argparse.Namespace) -> int:
    x, y = (element(text, invocation.n) for text in invocation.inputs)
    z = lcm(x, y)
    emit(invocation, str(z), ElementRecord.of(z))
    return 0


def run_gcd(invocation: Invocation, args: argparse.Namespace) -> int:
    x, y = (element(text, invocation.n) for text in invocation.inputs)
    z = gcd(x, y)
    emit(invocation, str(z), ElementRecord.of(z))
    return 0


def run_divides(invocation: Invocation, args: argparse.Namespace) -> int:
    x, y = (element(text, invocation.n) for text in invocation.inputs)
    result = divides(x, y)
    emit(invocation, verdict(result), BooleanRecord(result=result))
    return 0
