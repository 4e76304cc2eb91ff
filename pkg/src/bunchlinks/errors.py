"""Exception hierarchy.

Every domain error carries a short ``name`` that the CLI prints verbatim.
"""

from __future__ import annotations


class LinkError(Exception):
    """Base class for all domain errors raised by this package."""

    name = "LinkError"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.name}: {msg}" if msg else self.name


class EmptyWord(LinkError):
    name = "EmptyWord"


class SingleLetterWord(LinkError):
    name = "SingleLetterWord"


class PeriodicWord(LinkError):
    name = "PeriodicWord"


class ExponentOverflow(LinkError):
    name = "ExponentOverflow"


class WordSyntaxError(LinkError):
    """Malformed word text; ``offset`` is the byte offset of the bad token."""

    name = "SyntaxError"

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class DuplicateCyclicClass(LinkError):
    name = "DuplicateCyclicClass"


class UnknownLabel(LinkError):
    name = "UnknownLabel"


class IndistinguishableBases(LinkError):
    name = "IndistinguishableBases"


class CapExceeded(LinkError):
    name = "CapExceeded"


class TieDetected(LinkError):
    name = "TieDetected"


class MismatchedInput(LinkError):
    name = "MismatchedInput"


class LayoutViolation(LinkError):
    name = "LayoutViolation"


class InvalidTripNumber(LinkError):
    name = "InvalidTripNumber"
