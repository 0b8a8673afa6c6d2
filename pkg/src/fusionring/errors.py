"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "FusionError",
    "UnknownLabel",
    "NotAGroup",
    "NotFinite",
    "NotSaturated",
    "UnsupportedProvider",
    "IllConditioned",
    "BadParameter",
    "ParseError",
    "InvalidRing",
]


class FusionError(Exception):
    """Base class for errors raised by this package."""


class UnknownLabel(FusionError):
    """A label id does not name an irreducible of the ring at hand."""


class NotAGroup(FusionError):
    """A multiplication table fails a group axiom (carries which one)."""


class NotFinite(FusionError):
    """Operation requires a ring with finitely many irreducibles."""


class NotSaturated(FusionError):
    """Operation requires a subset closed under conjugation and decomposition."""


class UnsupportedProvider(FusionError):
    """Operation is only defined for a narrower class of rings."""


class IllConditioned(FusionError):
    """Numerical rank decision has no stable gap at the requested tolerance."""


class BadParameter(FusionError):
    """Numeric construction called with out-of-domain parameters."""


class ParseError(FusionError):
    """Malformed ring spec or label string.

    ``position`` is the character offset the parser gave up at, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class InvalidRing(FusionError):
    """A ring table failed structural or axiom validation; carries the violations."""

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = list(violations or [])
