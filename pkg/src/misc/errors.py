class PaaError(Exception):
    """Base class of every error raised by this package."""


class ValidationError(PaaError, ValueError):
    """An argument or a construction contract was violated."""


class DomainOverflowError(ValidationError):
    """An operation produced a value outside of its value domain."""


class PatternParseError(ValidationError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedFeatureError(ValidationError):
    """A pattern uses syntax that is recognized but not supported."""


class ConvergenceError(PaaError, RuntimeError):
    def __init__(self, message: str, residual: float | None = None) -> None:
        if residual is not None:
            message = f"{message} (residual {residual:.3e})"
        super().__init__(message)
        self.residual = residual


class ResourceGuardError(PaaError, MemoryError):
    """A construction would exceed the configured state-space limit."""


class UsageError(PaaError):
    """The command line or a referenced input file is unusable."""


def error_category(error: BaseException) -> str:
    if isinstance(error, UsageError):
        return "usage"
    if isinstance(error, DomainOverflowError):
        return "domain-overflow"
    if isinstance(error, PatternParseError):
        return "pattern-parse"
    if isinstance(error, UnsupportedFeatureError):
        return "unsupported"
    if isinstance(error, ValidationError):
        return "validation"
    if isinstance(error, ConvergenceError):
        return "convergence"
    if isinstance(error, ResourceGuardError):
        return "resource-guard"
    return "internal"
