import logging
import sys
from pathlib import Path
from typing import Optional

from cais_resilience.utils.env_utils import env_str

_logging_configured = False
_log_file_path: Optional[Path] = None

FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
CONSOLE_FORMAT = '%(levelname)s - %(name)s - %(message)s'


def setup_logging(log_file_name: Optional[str] = None, *, verbose: bool = False) -> None:
    """
    Setup logging for the command line tool.

    Logs go to `log/<LOG_FILE_NAME>` under the working directory only when a file
    name is given (argument or LOG_FILE_NAME), and to stderr when `verbose` is set
    or ENV=debug. Stdout is left to command output.

    Log levels:
    - CRITICAL
    - ERROR
    - WARNING
    - INFO
    - DEBUG
    """
    global _logging_configured, _log_file_path

    file_name = log_file_name or env_str('LOG_FILE_NAME', None)
    log_file = Path.cwd() / "log" / file_name if file_name else None

    if _logging_configured and _log_file_path == log_file and not verbose:
        return

    root_logger = logging.getLogger()
    root_logger.setLevel(env_str('LOG_LEVEL', 'DEBUG' if verbose else 'WARNING').upper())

    # Clear any existing handlers to avoid duplicates
    root_logger.handlers.clear()

    if log_file is not None:
        log_file.parent.mkdir(exist_ok=True)
        file_handler = logging.FileHandler(str(log_file), mode='a')
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        root_logger.addHandler(file_handler)

    if verbose or env_str('ENV', None) == 'debug':
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        root_logger.addHandler(console_handler)

    if not root_logger.handlers:
        root_logger.addHandler(logging.NullHandler())

    def log_uncaught_exception(exc_type, exc_value, exc_traceback):
        # Don't log KeyboardInterrupt (Ctrl+C)
        if issubclass(exc_type, KeyboardInterrupt):
            sys.__excepthook__(exc_type, exc_value, exc_traceback)
            return

        logging.critical(
            "Uncaught exception crashed the command",
            exc_info=(exc_type, exc_value, exc_traceback)
        )
        sys.__excepthook__(exc_type, exc_value, exc_traceback)

    sys.excepthook = log_uncaught_exception

    _log_file_path = log_file
    _logging_configured = True
    logging.debug("Logging configured successfully with global exception handling")


def get_log_file_path() -> Optional[Path]:
    return _log_file_path
