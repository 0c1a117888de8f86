"""Exception hierarchy.

Every error carries a machine-readable ``code`` (the class name) so the
command-line front end can serialize it.  ``DomainError`` subclasses are
failures of mathematical preconditions; ``InputError`` subclasses are
malformed input files.
"""


class CoopError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def code(self):
        return type(self).__name__


class DomainError(CoopError, ValueError):
    pass


class InputError(CoopError, ValueError):
    pass


class PlayerCountOutOfRange(DomainError):
    pass


class DuplicateCoalition(DomainError):
    pass


class NonzeroEmptySet(DomainError):
    pass


class EmptyCarrier(DomainError):
    pass


class MixedPlayerCounts(DomainError):
    pass


class EmptyList(DomainError):
    pass


class NotAdditive(DomainError):
    pass


class NotInClass(DomainError):
    """A game lies outside a required class; ``condition`` names the failed test."""

    def __init__(self, message, condition=None, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class NotZeroMonotone(NotInClass):
    pass


class NotWeaklySuperadditive(NotInClass):
    pass


class DimensionMismatch(DomainError):
    pass


class Unbounded(DomainError):
    pass


class SizeLimit(DomainError):
    pass


class NotPointed(DomainError):
    pass


class OutsideSupport(DomainError):
    pass


class InvalidWeights(DomainError):
    pass


class EmptyK(DomainError):
    pass


class UnboundedK(DomainError):
    pass


class NotABasis(DomainError):
    pass


class MissingTableEntry(DomainError):
    pass


class OutsideCone(DomainError):
    pass


class FanMismatch(DomainError):
    pass


class GrandCoalitionMismatch(DomainError):
    pass


class ParseError(InputError):
    pass


class InvariantViolation(InputError):
    pass
