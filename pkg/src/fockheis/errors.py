"""Typed errors shared by all modules.

Two families, matching the exit codes of the command line front end:
``InputError`` (malformed or non-canonical input, exit 2) and
``DomainError`` (well-formed input outside an operation's domain, exit 3).
"""


class FockHeisError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FockHeisError, ValueError):
    """Malformed arguments or non-canonical encodings."""


class DomainError(FockHeisError, ValueError):
    """Well-formed input that an operation cannot accept."""


class InvalidInput(InputError):
    """Argument violates a structural precondition (e.g. non-canonical partition)."""


class SizeMismatch(InputError):
    """Partition or representation sizes disagree."""


class BasisMismatch(InputError):
    """Symmetric functions are not in the basis an operation requires."""


class RangeError(InputError):
    """Integer argument outside its allowed range."""


class NotAPartition(DomainError):
    """Part-wise arithmetic produced a sequence that is not weakly decreasing."""


class InvalidParam(DomainError):
    """Rational parameter outside the allowed region (wrong sign or singular)."""


class OnWall(DomainError):
    """Query point lies on a wall instead of inside a stability interval."""


class MissingTable(DomainError):
    """A required entry is absent from a user-supplied coprime class table."""


class ConjecturalDisabled(DomainError):
    """Operation implements a conjecture-level construction and was not opted in."""
