"""CLI entrypoint for ctilde."""

from __future__ import annotations

import argparse
import logging
import sys

from pydantic import ValidationError

from ctilde import __version__
from ctilde.commands import centralize, divisors, draw, hurwitz, lattice, present, words
from ctilde.errors import CtildeError, ParseError
from ctilde.models import ErrorRecord, Invocation
from ctilde.settings import DEFAULT_ORBIT_CAP, DEFAULT_WINDOW

logger = logging.getLogger(__name__)

COMMANDS = (words, lattice, divisors, present, hurwitz, centralize, draw)


def _common_options(formats: tuple[str, ...]) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=2, help="rank of the C-tilde group (default: 2)")
    common.add_argument(
        "-K",
        "--window",
        type=int,
        default=DEFAULT_WINDOW,
        help=f"offset window for enumerations (default: {DEFAULT_WINDOW})",
    )
    common.add_argument("--format", choices=formats, default="text")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(("text", "json"))
    drawing = _common_options(("text", "json", "svg"))

    parser = argparse.ArgumentParser(
        prog="ctilde", description="Dual Garside structure of the affine Artin group of type C-tilde"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        # only draw renders SVG
        module.register(subparsers, drawing if module is draw else common)
    return parser


def _report(fmt: str, kind: str, detail: str) -> None:
    if fmt == "json":
        print(ErrorRecord(error=kind, detail=detail).model_dump_json())
    else:
        print(f"ctilde: {kind}: {detail}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    """Parse *argv*, run one subcommand and return its exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    cap = getattr(args, "cap", None)
    try:
        invocation = Invocation(
            command=args.command,
            n=args.n,
            window=args.window,
            format=args.format,
            cap=DEFAULT_ORBIT_CAP if cap is None else cap,
            inputs=list(args.inputs),
        )
    except ValidationError as exc:
        errors = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        _report(args.format, "invalid_arguments", errors)
        return 2

    logger.debug("running %s", invocation)
    try:
        return args.handler(invocation, args)
    except ParseError as exc:
        _report(invocation.format, exc.kind, exc.detail)
        return 2
    except CtildeError as exc:
        _report(invocation.format, exc.kind, exc.detail)
        return 1


if __name__ == "__main__":
    sys.exit(main())
