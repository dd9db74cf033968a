"""Load the TOML document holding the `[scenario]` and `[monitor]` tables."""

import tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import ValidationError

from cais_resilience.contracts.monitor_config import MonitorConfig
from cais_resilience.contracts.scenario_config import ScenarioConfig
from cais_resilience.exceptions.common_exceptions import ConfigInvalidException

SECTIONS = ("scenario", "monitor")
FORWARDED_KEYS = ("k_threshold", "window_size")


@dataclass(frozen=True)
class AppConfig:
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    monitor: MonitorConfig = field(default_factory=MonitorConfig)


def read_config_file(path: Path) -> dict[str, Any]:
    try:
        with path.open("rb") as f:
            data = tomllib.load(f)
    except FileNotFoundError as exc:
        raise ConfigInvalidException(f"Config file not found: {path}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigInvalidException(f"{path}: {exc}") from exc

    unknown = sorted(set(data) - set(SECTIONS))
    if unknown:
        raise ConfigInvalidException(f"{path}: unknown table(s) {', '.join(unknown)}")
    for section in SECTIONS:
        if not isinstance(data.get(section, {}), dict):
            raise ConfigInvalidException(f"{path}: `{section}` must be a table")
    misplaced = sorted(set(data.get("scenario", {})) & set(FORWARDED_KEYS))
    if misplaced:
        raise ConfigInvalidException(f"{path}: {', '.join(misplaced)} belong in the [monitor] table")
    return data


def load_config(
    path: Optional[Path] = None,
    *,
    scenario_overrides: Optional[Mapping[str, Any]] = None,
    monitor_overrides: Optional[Mapping[str, Any]] = None,
) -> AppConfig:
    """
    Resolve the configuration: defaults < config file < overrides (CLI flags).

    Overrides whose value is None are ignored.
    """
    data = read_config_file(path) if path is not None else {}
    monitor_data = {**data.get("monitor", {}), **_present(monitor_overrides)}
    scenario_data = {**data.get("scenario", {}), **_present(scenario_overrides)}

    try:
        monitor = MonitorConfig(**monitor_data)
        scenario = ScenarioConfig(
            **scenario_data,
            k_threshold=monitor.k_threshold,
            window_size=monitor.window_size,
        )
    except ValidationError as exc:
        raise ConfigInvalidException(_describe(exc), errors=exc.errors(include_url=False)) from exc
    return AppConfig(scenario=scenario, monitor=monitor)


def _present(overrides: Optional[Mapping[str, Any]]) -> dict[str, Any]:
    return {key: value for key, value in (overrides or {}).items() if value is not None}


def _describe(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors(include_url=False):
        location = ".".join(str(item) for item in error["loc"]) or "config"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)
