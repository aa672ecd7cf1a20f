class KspaceError(Exception):
    """Base class for domain errors raised by this package."""


class FormatError(KspaceError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainMismatchError(KspaceError):
    """Two values over different domains were combined."""


class NotALearningSpaceError(KspaceError):
    """An operation requiring a learning space got a base that is not one."""


class ResourceLimitError(KspaceError):
    """A configurable state-count or row-count guard was exceeded."""
