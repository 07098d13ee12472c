"""Domain errors raised by the library.

Every error carries a stable ``name`` used in CLI/JSON output.
"""


class PCFlagError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ConductorMismatch(PCFlagError):
    pass


class NoEmbedding(PCFlagError):
    pass


class CapExceeded(PCFlagError):
    pass


class NoReflections(PCFlagError):
    pass


class DegreeExtractionFailed(PCFlagError):
    pass


class NotReflectionGenerated(PCFlagError):
    pass


class BoundExceeded(PCFlagError):
    pass


class NotPrimitive(PCFlagError):
    pass


class NotPrimitiveRoot(PCFlagError):
    pass


class InvalidL(PCFlagError):
    pass


class HypothesisViolated(PCFlagError):
    pass


class ParseError(PCFlagError):
    pass


class NonInvertibleGenerator(PCFlagError):
    pass


class UnknownGroup(PCFlagError):
    pass
