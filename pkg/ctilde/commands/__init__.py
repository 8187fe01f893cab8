"""Subcommands of the ``ctilde`` command line, one module per surface."""

from __future__ import annotations

from pydantic import BaseModel

from ctilde.germ import GermElement, parse_element
from ctilde.models import Invocation
from ctilde.periodic import Strip


def element(text: str, n: int) -> GermElement:
    """Parse an element of the germ on the C-tilde strip of rank *n*."""
    return parse_element(text, Strip.ctilde(n))


def emit(invocation: Invocation, text: str, record: BaseModel) -> None:
    if invocation.format == "json":
        print(record.model_dump_json())
    else:
        print(text)


def verdict(value: bool) -> str:
    return "true" if value else "false"
