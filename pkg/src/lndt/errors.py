"""Exception types shared across the library."""

from __future__ import annotations


class LndtError(Exception):
    """Base class for all library errors."""


class ParseError(LndtError):
    """Malformed textual input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class AliasError(LndtError):
    """Unknown instance alias."""


class IllFormedError(LndtError):
    """An operation received a value that fails well-formedness checking."""

    def __init__(self, report):
        super().__init__(f"ill-formed value: {report.describe()}")
        self.report = report


class SortMismatchError(LndtError):
    """Atom sorts disagree where a single base sort is required."""


class PathError(LndtError):
    """A path does not address an atom of the value."""


class SeedError(LndtError):
    """A seed function was applied to a value of the wrong shape."""


class NullSeedError(SeedError):
    """A null seed was applied; uninhabited positions never hold values."""


class UninhabitedError(LndtError):
    """Generation was requested for an uninhabitable type."""


class LevelError(LndtError):
    """Level discipline violated in a depth-indexed bush."""
