"""Base command for the built-in CLI operations (synchronous)."""

import argparse
import logging
import sys
from abc import ABC, abstractmethod

from cais_resilience.exceptions.common_exceptions import (
    EXIT_OK,
    EXIT_RUNTIME_FAILURE,
    AppException,
)


class CommandBase(ABC):
    """Base class for all built-in CLI commands (sync)."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Command name."""
        pass

    @property
    @abstractmethod
    def help(self) -> str:
        """Command help text."""
        pass

    def configure_parser(self, parser: argparse.ArgumentParser) -> None:
        """Configure command-specific arguments. Override if needed."""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> None:
        """Execute the command. Raise AppException to fail with its exit code."""
        pass

    def run(self, args: argparse.Namespace) -> int:
        """Execute and translate failures into exit statuses."""
        try:
            self.execute(args)
        except AppException as exc:
            logging.debug(f"{self.name} failed: {exc.dict()}")
            print(f"❌ {exc.message}", file=sys.stderr)
            return exc.exit_code
        except Exception as exc:  # noqa: BLE001
            logging.exception(f"{self.name} crashed")
            print(f"❌ {self.name} failed: {exc}", file=sys.stderr)
            return EXIT_RUNTIME_FAILURE
        return EXIT_OK
