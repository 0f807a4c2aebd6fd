"""Figure rendering for photonlimits sweep CSV files."""

from .render import (
    FIGURE_IDS,
    FigureSpec,
    RenderError,
    SeriesData,
    extract_series,
    parse_sweep_csv,
    render,
)

__version__ = "0.1.0"
