"""Run the simulated case study and write its artifacts."""

import argparse

from cais_resilience.decorators import stopwatch
from cais_resilience.simulation.scenario import run_scenario
from cais_resilience.utils.trace_utils import write_trace

from .command_base import CommandBase
from .options import add_config_arguments, resolve_config
from .outputs import TRACE_FILE, phase_summary, write_file, write_outputs


class SimulateCommand(CommandBase):
    """Command to simulate the colour-sorting scenario and monitor it."""

    @property
    def name(self) -> str:
        return "simulate"

    @property
    def help(self) -> str:
        return "Simulate the scenario and write timeline, report, plot and trace"

    def configure_parser(self, parser: argparse.ArgumentParser) -> None:
        add_config_arguments(parser)
        parser.add_argument("--seed", type=int, help="Seed of the simulation RNG")
        parser.add_argument("--num-iterations", type=int, help="Number of iterations to simulate")

    @stopwatch
    def execute(self, args: argparse.Namespace) -> None:
        config = resolve_config(args, seed=args.seed, num_iterations=args.num_iterations)
        scenario_run = run_scenario(config.scenario, config.monitor)

        write_outputs(scenario_run.run, args.output_dir)
        write_file(args.output_dir, TRACE_FILE, write_trace(scenario_run.events))

        print(phase_summary(scenario_run.run))
        print(f"✅ Wrote results to {args.output_dir}")
