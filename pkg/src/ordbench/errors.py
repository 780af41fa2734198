"""Exception types shared across the package."""


class OrdbenchError(Exception):
    """Base class for every error raised by this package."""


class CycleDetected(OrdbenchError):
    """The declared order relation contains a cycle (antisymmetry fails)."""


class DuplicateLabel(OrdbenchError):
    pass


class UnknownLabel(OrdbenchError):
    pass


class IndexOutOfRange(OrdbenchError):
    pass


class DimensionMismatch(OrdbenchError):
    pass


class NotMonotone(OrdbenchError):
    pass


class SourceTargetMismatch(OrdbenchError):
    pass


class NotBounded(OrdbenchError):
    pass


class NotCommutative(OrdbenchError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(OrdbenchError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotJoinPreserving(OrdbenchError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidModulus(OrdbenchError):
    pass


class SizeBoundExceeded(OrdbenchError):
    pass


class ParseError(OrdbenchError):
    """A text-format error, carrying file name, line number and message."""

    def __init__(self, filename, line, message):
        super().__init__(f"{filename}:{line}: {message}")
        self.filename = filename
        self.line = line
        self.message = message
