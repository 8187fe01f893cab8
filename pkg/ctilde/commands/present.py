"""present: dual relations among the reflections of a window."""

from __future__ import annotations

import argparse

from ctilde.commands import emit, verdict
from ctilde.garside import emit_presentation
from ctilde.models import Invocation, PresentationRecord


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    sub = subparsers.add_parser(
        "present", parents=[parent], help="dual presentation truncated to the offset window"
    )
    sub.set_defaults(handler=run_present, inputs=[])


def run_present(invocation: Invocation, args: argparse.Namespace) -> int:
    presentation = emit_presentation(invocation.n, invocation.window)
    lines = [
        f"# n={presentation.n} window={presentation.window} "
        f"truncated={verdict(presentation.truncated)}",
        "generators: " + " ".join(str(rho) for rho in presentation.generators),
    ]
    lines.extend(str(relation) for relation in presentation.relations)
    emit(invocation, "\n".join(lines), PresentationRecord.of(presentation))
    return 0
