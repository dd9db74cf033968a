"""Flags shared by the commands that resolve a configuration."""

import argparse
from pathlib import Path
from typing import Any

from cais_resilience.contracts.monitor_config import DegradationTrigger, RecoveryComparison
from cais_resilience.utils.config_utils import AppConfig, load_config


def add_config_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="TOML file with [scenario] and [monitor] tables")
    parser.add_argument("--output-dir", type=Path, default=Path("."), help="Directory for timeline.csv, report.json and plot.svg")
    parser.add_argument("--k", dest="k_threshold", type=float, help="Desired confidence level K")
    parser.add_argument("--window-size", type=int, help="Iterations per time frame")
    parser.add_argument(
        "--degradation-trigger",
        choices=[trigger.value for trigger in DegradationTrigger],
        help="Condition starting a disruptive state",
    )
    parser.add_argument(
        "--recovery-comparison",
        choices=[comparison.value for comparison in RecoveryComparison],
        help="Comparison of ACR against the ACR threshold",
    )


def monitor_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "k_threshold": args.k_threshold,
        "window_size": args.window_size,
        "degradation_trigger": args.degradation_trigger,
        "recovery_comparison": args.recovery_comparison,
    }


def resolve_config(args: argparse.Namespace, **scenario_overrides: Any) -> AppConfig:
    return load_config(
        args.config,
        scenario_overrides=scenario_overrides,
        monitor_overrides=monitor_overrides(args),
    )
