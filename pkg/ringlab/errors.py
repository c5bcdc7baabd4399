"""Exceptions raised by ringlab.

Every error is a ``ValueError`` so callers that only care about bad input can
catch the builtin.  ``exit_code`` is what the CLI returns when the error
escapes a command.
"""

from __future__ import annotations


class RingLabError(ValueError):
    """Base class for ringlab errors (usage errors unless stated otherwise)."""

    exit_code = 2


class RingValidationError(RingLabError):
    """A table pair failed one of the ring axioms."""

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class BadEntry(RingValidationError):
    pass


class NotAbelianGroup(RingValidationError):
    pass


class NotAssociative(RingValidationError):
    pass


class NotDistributive(RingValidationError):
    pass


class IndexOutOfRange(RingLabError):
    pass


class VertexNotInGraph(RingLabError):
    pass


class EmptyFactorList(RingLabError):
    pass


class BadDimensions(RingLabError):
    pass


class NotPrime(RingLabError):
    pass


class TooLarge(RingLabError):
    pass


class OrderTooLarge(RingLabError):
    pass


class NotLeftIdentity(RingLabError):
    pass


class NotAnIdeal(RingLabError):
    pass


class NotASubring(RingLabError):
    pass


class UnknownClaim(RingLabError):
    pass


class InternalInvariantViolation(RingLabError):
    """A proven structural fact failed to hold; this is a bug, not bad input."""

    exit_code = 1
