"""Figure renderer for qnh sweep CSVs."""

from .render import (
    CSV_HEADER,
    FIGURE_LAYOUTS,
    FigureSpec,
    Layout,
    PlotInputError,
    build_figure,
    figure_spec,
    load_rows,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "FIGURE_LAYOUTS",
    "FigureSpec",
    "Layout",
    "PlotInputError",
    "build_figure",
    "figure_spec",
    "load_rows",
    "render",
]
