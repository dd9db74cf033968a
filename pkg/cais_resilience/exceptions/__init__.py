"""Custom exceptions for cais_resilience."""

from .common_exceptions import (
    AppException,
    ConfigInvalidException,
    ReportInvalidException,
    PlotException,
    EXIT_OK,
    EXIT_RUNTIME_FAILURE,
    EXIT_USAGE,
)
from .monitor_exceptions import MonitorContractException
from .trace_exceptions import (
    TraceException,
    MalformedLineException,
    NonContiguousIndexException,
    OutOfRangeEpsilonException,
)

__all__ = [
    # common
    "AppException",
    "ConfigInvalidException",
    "ReportInvalidException",
    "PlotException",
    "EXIT_OK",
    "EXIT_RUNTIME_FAILURE",
    "EXIT_USAGE",
    # monitor
    "MonitorContractException",
    # trace
    "TraceException",
    "MalformedLineException",
    "NonContiguousIndexException",
    "OutOfRangeEpsilonException",
]
