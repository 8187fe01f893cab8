"""atoms and divisors: bounded enumerations below an element."""

from __future__ import annotations

import argparse

from ctilde.commands import element, emit, verdict
from ctilde.germ import divisors
from ctilde.models import AtomsRecord, DivisorsRecord, ElementRecord, Invocation, ReflectionRecord
from ctilde.reflections import atoms_dividing


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser("atoms", parents=[parent], help="reflections dividing an element")
    sub.add_argument("inputs", nargs=1, metavar="CYCLES")
    sub.set_defaults(handler=run_atoms)

    sub = subparsers.add_parser("divisors", parents=[parent], help="left divisors of an element")
    sub.add_argument("inputs", nargs=1, metavar="CYCLES")
    sub.add_argument(
        "--all", dest="every", action="store_true", help="include divisors not fixed by sigma"
    )
    sub.set_defaults(handler=run_divisors)


def _header(window: int, complete: bool, count: int) -> str:
    return f"# window={window} complete={verdict(complete)} count={count}"


def run_atoms(invocation: Invocation, args: argparse.Namespace) -> int:
    x = element(invocation.inputs[0], invocation.n)
    found = atoms_dividing(x, invocation.window)
    lines = [_header(found.window, found.complete, len(found))]
    lines.extend(str(rho) for rho in found)
    record = AtomsRecord(
        element=str(x),
        window=found.window,
        complete=found.complete,
        atoms=[ReflectionRecord.of(rho) for rho in found],
    )
    emit(invocation, "\n".join(lines), record)
    return 0


def run_divisors(invocation: Invocation, args: argparse.Namespace) -> int:
    x = element(invocation.inputs[0], invocation.n)
    found = divisors(x, invocation.window, sigma_stable=False if args.every else None)
    lines = [_header(found.window, found.complete, len(found))]
    lines.extend(str(y) for y in found)
    record = DivisorsRecord(
        element=str(x),
        window=found.window,
        complete=found.complete,
        count=len(found),
        divisors=[ElementRecord.of(y) for y in found],
    )
    emit(invocation, "\n".join(lines), record)
    return 0
