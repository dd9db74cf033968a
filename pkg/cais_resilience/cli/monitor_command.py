"""Monitor an externally produced iteration trace."""

import argparse
from pathlib import Path

from cais_resilience.core.monitor import monitor_events
from cais_resilience.decorators import stopwatch
from cais_resilience.exceptions.common_exceptions import EXIT_USAGE, AppException
from cais_resilience.utils.trace_utils import read_trace

from .command_base import CommandBase
from .options import add_config_arguments, resolve_config
from .outputs import phase_summary, write_outputs


class MonitorCommand(CommandBase):
    """Command to run the resilience monitor over a JSON Lines trace."""

    @property
    def name(self) -> str:
        return "monitor"

    @property
    def help(self) -> str:
        return "Monitor a JSON Lines trace and write timeline, report and plot"

    def configure_parser(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("trace", type=Path, help="Path to the JSON Lines trace")
        add_config_arguments(parser)

    @stopwatch
    def execute(self, args: argparse.Namespace) -> None:
        config = resolve_config(args)
        try:
            with args.trace.open("rb") as f:
                events = read_trace(f)
        except OSError as exc:
            raise AppException(f"Cannot read trace {args.trace}: {exc.strerror}", exit_code=EXIT_USAGE) from exc

        run = monitor_events(events, config.monitor)
        write_outputs(run, args.output_dir)

        print(phase_summary(run))
        print(f"✅ Wrote results to {args.output_dir}")
