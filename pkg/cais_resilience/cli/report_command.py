"""Print the resilience measures of a stored report."""

import argparse
from pathlib import Path

from cais_resilience.exceptions.common_exceptions import ReportInvalidException
from cais_resilience.utils.report_utils import format_report_table, read_report

from .command_base import CommandBase


class ReportCommand(CommandBase):
    """Command to render report.json as a table."""

    @property
    def name(self) -> str:
        return "report"

    @property
    def help(self) -> str:
        return "Print the measures stored in a report.json"

    def configure_parser(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("report", type=Path, help="Path to report.json")

    def execute(self, args: argparse.Namespace) -> None:
        try:
            data = args.report.read_bytes()
        except OSError as exc:
            raise ReportInvalidException(f"Cannot read {args.report}: {exc.strerror}") from exc
        print(format_report_table(read_report(data)))
