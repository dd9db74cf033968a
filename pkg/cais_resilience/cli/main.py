#!/usr/bin/env python3
"""cais-resilience CLI - resilience monitoring for human-in-the-loop learners."""

import argparse
import sys
from typing import Optional, Sequence

from cais_resilience.boot import boot
from cais_resilience.exceptions.common_exceptions import EXIT_USAGE

from .monitor_command import MonitorCommand
from .report_command import ReportCommand
from .simulate_command import SimulateCommand
from .version_command import VersionCommand


def build_parser() -> tuple[argparse.ArgumentParser, dict]:
    parser = argparse.ArgumentParser(
        description="Simulate, monitor and report the resilience of collaborative AI systems",
        prog="cais-resilience",
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug output to stderr")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    commands = [
        SimulateCommand(),
        MonitorCommand(),
        ReportCommand(),
        VersionCommand(),
    ]

    command_map = {}
    for command in commands:
        cmd_parser = subparsers.add_parser(command.name, help=command.help)
        command.configure_parser(cmd_parser)
        command_map[command.name] = command
    return parser, command_map


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse `argv`, execute the chosen command and return its exit status."""
    parser, command_map = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command not in command_map:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    boot(verbose=args.verbose)
    return command_map[args.command].run(args)


def main() -> None:
    """Main CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
