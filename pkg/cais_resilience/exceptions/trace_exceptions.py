from typing import Optional

from cais_resilience.exceptions.common_exceptions import AppException, EXIT_USAGE


class TraceException(AppException):
    """Base for every diagnostic raised while reading a trace or timeline."""

    def __init__(self, line_number: int, reason: str, *, error_type: Optional[str] = None):
        self.line_number = line_number
        self.reason = reason
        super().__init__(
            f"line {line_number}: {reason}",
            exit_code=EXIT_USAGE,
            error_type=error_type,
            data={"line_number": line_number},
        )


class MalformedLineException(TraceException):
    pass


class NonContiguousIndexException(TraceException):
    def __init__(self, line_number: int, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(line_number, f"expected index {expected}, found {found}")


class OutOfRangeEpsilonException(TraceException):
    def __init__(self, line_number: int, epsilon: float):
        self.epsilon = epsilon
        super().__init__(line_number, f"epsilon {epsilon!r} outside [0, 1]")
