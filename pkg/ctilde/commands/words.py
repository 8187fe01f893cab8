"""normalize and eq: Garside normal forms of words in σ0, ..., σn."""

from __future__ import annotations

import argparse

from ctilde.commands import emit
from ctilde.garside import format_normal_form, normalize, parse_word
from ctilde.models import EqualityRecord, Invocation, NormalFormRecord


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser(
        "normalize", parents=[parent], help="Garside normal form of a word, e.g. 's0 s2 s1^-1'"
    )
    sub.add_argument("inputs", nargs=1, metavar="WORD")
    sub.set_defaults(handler=run_normalize)

    sub = subparsers.add_parser(
        "eq", parents=[parent], help="exit 0 when two words are equal in the group, 1 otherwise"
    )
    sub.add_argument("inputs", nargs=2, metavar="WORD")
    sub.set_defaults(handler=run_eq)


def run_normalize(invocation: Invocation, args: argparse.Namespace) -> int:
    g = normalize(parse_word(invocation.inputs[0], invocation.n), invocation.n)
    emit(invocation, format_normal_form(g), NormalFormRecord.of(g))
    return 0


def run_eq(invocation: Invocation, args: argparse.Namespace) -> int:
    left, right = (normalize(parse_word(w, invocation.n), invocation.n) for w in invocation.inputs)
    equal = left == right
    text = f"{format_normal_form(left)}\n{format_normal_form(right)}\n{'equal' if equal else 'different'}"
    emit(
        invocation,
        text,
        EqualityRecord(equal=equal, left=NormalFormRecord.of(left), right=NormalFormRecord.of(right)),
    )
    return 0 if equal else 1
