"""Exception hierarchy shared by all modules."""


class PosetError(Exception):
    """Base class for errors raised by this package."""


class CycleError(PosetError, ValueError):
    """The given relation pairs contain a directed cycle."""


class SizeError(PosetError, ValueError):
    """Input is too large for an enumeration-based routine."""


class InvariantError(PosetError, RuntimeError):
    """A structural precondition or internal invariant does not hold."""


class ResourceError(PosetError, MemoryError):
    """A memo table grew beyond its configured cap."""


class DomainError(PosetError, ValueError):
    """A point lies outside the domain of a bound expression."""


class DepthExceeded(PosetError, RuntimeError):
    """Box splitting hit its depth cap with the bound still too large.

    ``certificate`` holds the Failed certificate with the offending box.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class FormatError(PosetError, ValueError):
    """An instance file could not be parsed."""


class AlgorithmMismatch(PosetError, ValueError):
    """The requested algorithm does not accept this kind of instance."""
