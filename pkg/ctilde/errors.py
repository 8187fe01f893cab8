"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class CtildeError(Exception):
    """Base class for every domain error raised by ctilde."""

    kind = "error"

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class PeriodMismatchError(CtildeError):
    kind = "period_mismatch"


class NotInGermError(CtildeError):
    """A permutation or partition is not an element of the germ.

    *clause* names the violated condition, e.g. ``"total_shift"`` or
    ``"crossing"``.
    """

    kind = "not_in_germ"

    def __init__(self, detail: str, clause: str = "") -> None:
        super().__init__(detail)
        self.clause = clause


class NotSigmaStableError(CtildeError):
    kind = "not_sigma_stable"


class NotDivisibleError(CtildeError):
    kind = "not_divisible"


class WindowError(CtildeError):
    kind = "window"


class ParseError(CtildeError):
    kind = "parse_error"


class CycleSyntaxError(ParseError):
    kind = "cycle_syntax"


class WordSyntaxError(ParseError):
    kind = "word_syntax"


class PartitionSyntaxError(ParseError):
    kind = "partition_syntax"
