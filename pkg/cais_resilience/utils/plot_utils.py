"""SVG rendering of the ACR curve with its threshold and phase bands."""

import io
from itertools import groupby
from typing import Optional, Sequence, Union

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from cais_resilience.contracts.phase import Phase, PhaseLabel
from cais_resilience.exceptions.common_exceptions import PlotException

PHASE_COLORS = {
    Phase.INITIAL_LEARNING: "#9e9e9e",
    Phase.FIRST_STEADY: "#4caf50",
    Phase.FIRST_DISRUPTIVE: "#f44336",
    Phase.RECOVERED: "#2196f3",
    Phase.SECOND_DISRUPTIVE: "#ff9800",
    Phase.SECOND_STEADY: "#009688",
}

SVG_RC = {
    "svg.hashsalt": "cais-resilience",
    "svg.fonttype": "none",
}

ACR_SERIES_GID = "acr-series"
THRESHOLD_GID = "acr-threshold"


def band_gid(phase: Phase, start: int) -> str:
    return f"band-{phase.value}-{start}"


def _phase_of(item: Union[Phase, PhaseLabel]) -> Phase:
    return item.phase if isinstance(item, PhaseLabel) else Phase(item)


def build_figure(
    acr_series: Sequence[float],
    phase_history: Sequence[Union[Phase, PhaseLabel]],
    threshold: Optional[float],
) -> Figure:
    if len(acr_series) == 0:
        raise PlotException("Cannot plot an empty ACR series.")
    if len(phase_history) != len(acr_series):
        raise PlotException("Phase history and ACR series must have the same length.")

    values = np.asarray(acr_series, dtype=float)
    phases = [_phase_of(item) for item in phase_history]

    figure = Figure(figsize=(10, 4))
    axes = figure.add_subplot()

    start = 0
    for phase, run in groupby(phases):
        length = len(list(run))
        end = start + length - 1
        axes.axvspan(start - 0.5, end + 0.5, color=PHASE_COLORS[phase], alpha=0.15, linewidth=0, gid=band_gid(phase, start))
        axes.text(
            (start + end) / 2,
            1.01,
            phase.title,
            transform=axes.get_xaxis_transform(),
            ha="center",
            va="bottom",
            fontsize=7,
        )
        start = end + 1

    axes.plot(np.arange(len(values)), values, color="#212121", linewidth=1.2, gid=ACR_SERIES_GID)
    if threshold is not None:
        axes.axhline(threshold, color="#d32f2f", linestyle="--", linewidth=1.0, gid=THRESHOLD_GID)

    axes.set_xlim(-0.5, len(values) - 0.5)
    axes.set_ylim(0.0, 1.0)
    axes.set_xlabel("Iteration")
    axes.set_ylabel("ACR")
    return figure


def render_plot(
    acr_series: Sequence[float],
    phase_history: Sequence[Union[Phase, PhaseLabel]],
    threshold: Optional[float],
) -> bytes:
    """Standalone SVG; identical inputs give identical bytes."""
    figure = build_figure(acr_series, phase_history, threshold)
    buffer = io.BytesIO()
    with matplotlib.rc_context(SVG_RC):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
