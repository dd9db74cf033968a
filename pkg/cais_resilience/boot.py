from typing import Optional

from cais_resilience.utils.env_utils import configure_env
from cais_resilience.utils.logging import setup_logging


def boot(*,
    env_file_name: Optional[str] = None,
    log_file_name: Optional[str] = None,
    verbose: bool = False,
) -> None:
    """
    Sets up the process before a command runs.
    - Loads ambient environment variables from dotenv files
    - Sets up logging

    Args:
        env_file_name: Optional dotenv file to load instead of .env.<ENV> / .env.
        log_file_name: Optional log file name under `log/`.
        verbose: Mirror debug logs to stderr.
    """
    configure_env(env_file_name)
    setup_logging(log_file_name, verbose=verbose)
