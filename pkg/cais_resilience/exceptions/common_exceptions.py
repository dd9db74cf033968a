from typing import Optional

from cais_resilience.utils.serialisation import get_exception_error_type

EXIT_OK = 0
EXIT_RUNTIME_FAILURE = 1
EXIT_USAGE = 2


class AppException(Exception):
    def __init__(self,
        message: str,
        *,
        exit_code: int = EXIT_RUNTIME_FAILURE,
        error_type: Optional[str] = None,
        data: Optional[dict] = None
    ):
        """
        Universal exception, which is converted to a CLI exit status if caught by a command.

        Args:
            message: The error message.
            exit_code: The process exit status to use.
            error_type: The error type (if not provided, it will be inferred from the exception class name).
            data: Extra diagnostic data.
        """
        self.message = message
        self.exit_code = exit_code
        self.error_type = error_type or get_exception_error_type(self)
        self.data = data
        super().__init__(message)

    def dict(self) -> dict:
        return {
            "error_type": self.error_type,
            "message": self.message,
            "data": self.data,
        }


class ConfigInvalidException(AppException):
    def __init__(self, message: str, *, errors: Optional[list[dict]] = None):
        super().__init__(f"[CONFIG INVALID] {message}", exit_code=EXIT_USAGE, data={"errors": errors or []})


class ReportInvalidException(AppException):
    def __init__(self, message: str):
        super().__init__(f"[REPORT INVALID] {message}", exit_code=EXIT_USAGE)


class PlotException(AppException):
    def __init__(self, message: str):
        super().__init__(message, exit_code=EXIT_RUNTIME_FAILURE)
