"""Exception hierarchy shared across the package."""

from __future__ import annotations

__all__ = [
    "SteinitzError",
    "UniverseMismatchError",
    "NotDivisibleError",
    "NonFiniteExtensionError",
    "InfiniteCountError",
    "BoundExceededError",
    "LatticeOverflowError",
    "ChainOverflowError",
    "RingConstructionError",
    "ParseError",
]


class SteinitzError(Exception):
    """Base class for every error raised by this package."""


class UniverseMismatchError(SteinitzError, ValueError):
    """Binary operation on supernatural numbers over different prime universes."""


class NotDivisibleError(SteinitzError, ValueError):
    """Quotient or degree requested where divisibility does not hold."""


class NonFiniteExtensionError(SteinitzError, ValueError):
    """An operation required a finite (natural number) extension degree."""


class InfiniteCountError(SteinitzError):
    """A listing was requested for a countably infinite collection.

    The ``description`` attribute carries a finite description of the
    collection so callers can still report what the set looks like.
    """

    def __init__(self, message: str, description: str | None = None):
        super().__init__(message)
        self.description = description


class BoundExceededError(SteinitzError):
    """A configured resource bound (size, factorization limit) was exceeded."""


class LatticeOverflowError(BoundExceededError):
    """Subring enumeration hit the configured cap on lattice size."""


class ChainOverflowError(BoundExceededError):
    """Chain enumeration hit the configured cap on the number of chains."""


class RingConstructionError(SteinitzError, ValueError):
    """A finite ring table failed axiom verification at construction."""


class ParseError(SteinitzError, ValueError):
    """Descriptor syntax error; ``position`` is a 0-based offset into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position
