"""Render the six standard figure layouts from qnh sweep CSVs.

Input is the CSV format emitted by ``qnh`` (header
``gamma_tilde,tau,concurrence,hs_min,trace_min,bell,norm``). Figures 1
and 3 are four-panel grids showing one measure per panel with one curve
per gamma_tilde; figures 2, 4, 5 and 6 show one panel per gamma_tilde
with all four measures overlaid. Every panel displaying the Bell
function carries a reference line at the violation threshold B = 2.

Rendering is deterministic: a fixed SVG hash salt and stripped date
metadata make re-runs byte-identical for identical CSVs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

CSV_HEADER = "gamma_tilde,tau,concurrence,hs_min,trace_min,bell,norm"
SVG_HASHSALT = "qnh-plot"
PNG_DPI = 150

# Caption palette for the four-panel figures, keyed by gamma_tilde.
GAMMA_COLORS = {0.1: "magenta", 0.25: "lightblue", 0.5: "darkblue", 1.5: "orange"}
FALLBACK_COLORS = ("tab:purple", "tab:brown", "tab:pink", "tab:gray")

# Overlay styling: (column, label, color, linestyle).
OVERLAY_SERIES = (
    ("hs_min", "MIN", "purple", "--"),
    ("trace_min", "Trace MIN", "darkgreen", "-"),
    ("bell", "Bell", "red", "-"),
    ("concurrence", "Concurrence", "cyan", "-"),
)

FOUR_PANEL_MEASURES = (
    ("concurrence", "(a) Concurrence"),
    ("bell", "(b) Bell function"),
    ("hs_min", "(c) MIN"),
    ("trace_min", "(d) Trace MIN"),
)


class Layout(enum.Enum):
    FOUR_PANEL_BY_MEASURE = "four_panel"
    TWO_PANEL_OVERLAY = "overlay"


FIGURE_LAYOUTS = {
    1: Layout.FOUR_PANEL_BY_MEASURE,
    2: Layout.TWO_PANEL_OVERLAY,
    3: Layout.FOUR_PANEL_BY_MEASURE,
    4: Layout.TWO_PANEL_OVERLAY,
    5: Layout.TWO_PANEL_OVERLAY,
    6: Layout.TWO_PANEL_OVERLAY,
}


@dataclass(frozen=True)
class FigureSpec:
    """What to render: which figure, from which CSVs, to which base path."""

    figure_number: int
    csv_paths: tuple[str, ...]
    layout: Layout
    output: str  # base path; .svg and .png are appended


class PlotInputError(Exception):
    """Missing, malformed or empty input CSV."""


def figure_spec(figure_number: int, csv_path: str, output: str) -> FigureSpec:
    """Standard spec for one of the six figures from a single CSV."""
    if figure_number not in FIGURE_LAYOUTS:
        raise PlotInputError(f"figure number must be in 1..6, got {figure_number!r}")
    return FigureSpec(
        figure_number=figure_number,
        csv_paths=(csv_path,),
        layout=FIGURE_LAYOUTS[figure_number],
        output=output,
    )


def load_rows(path: str) -> dict[str, np.ndarray]:
    """Read one sweep CSV into named columns; reject anything off-format."""
    try:
        with open(path, "r", newline="") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise PlotInputError(f"cannot read {path}: {exc}") from None
    if not lines or lines[0] != CSV_HEADER:
        raise PlotInputError(f"{path}: expected header {CSV_HEADER!r}")
    body = [line for line in lines[1:] if line]
    if not body:
        raise PlotInputError(f"{path}: no data rows")
    names = CSV_HEADER.split(",")
    try:
        table = np.array([[float(v) for v in line.split(",")] for line in body])
    except ValueError as exc:
        raise PlotInputError(f"{path}: {exc}") from None
    if table.shape[1] != len(names):
        raise PlotInputError(f"{path}: expected {len(names)} columns")
    return {name: table[:, k] for k, name in enumerate(names)}


def _gamma_blocks(data: dict[str, np.ndarray]) -> list[tuple[float, dict[str, np.ndarray]]]:
    """Split columns into per-gamma blocks, in order of first appearance."""
    gammas = data["gamma_tilde"]
    order = []
    for g in gammas:
        if g not in order:
            order.append(g)
    blocks = []
    for g in order:
        mask = gammas == g
        blocks.append((float(g), {k: v[mask] for k, v in data.items()}))
    return blocks


def _gamma_color(g: float, index: int) -> str:
    for key, color in GAMMA_COLORS.items():
        if abs(g - key) < 1e-12:
            return color
    return FALLBACK_COLORS[index % len(FALLBACK_COLORS)]


def _bell_reference(ax):
    ax.axhline(2.0, color="0.4", linestyle=":", linewidth=1.0)


def build_figure(spec: FigureSpec):
    """Assemble the matplotlib figure for a spec (no file output)."""
    merged = [load_rows(path) for path in spec.csv_paths]
    data = {
        k: np.concatenate([m[k] for m in merged]) for k in CSV_HEADER.split(",")
    }
    blocks = _gamma_blocks(data)

    if spec.layout is Layout.FOUR_PANEL_BY_MEASURE:
        fig, axes = plt.subplots(2, 2, figsize=(11.0, 8.0), constrained_layout=True)
        axes = axes.ravel()
        for ax, (column, title) in zip(axes, FOUR_PANEL_MEASURES):
            for index, (g, block) in enumerate(blocks):
                ax.plot(
                    block["tau"],
                    block[column],
                    color=_gamma_color(g, index),
                    label=f"γ̃ = {g:g}",
                )
            ax.set_title(title)
            ax.set_xlabel("τ")
            ax.set_ylabel(title.split(" ", 1)[1])
            if column == "bell":
                _bell_reference(ax)
        axes[0].legend(loc="upper right", fontsize=9)
    else:
        fig, axes = plt.subplots(
            1, len(blocks), figsize=(5.5 * len(blocks), 4.2), constrained_layout=True
        )
        axes = np.atleast_1d(axes)
        for ax, (g, block) in zip(axes, blocks):
            for column, label, color, style in OVERLAY_SERIES:
                ax.plot(block["tau"], block[column], color=color, linestyle=style, label=label)
            # Bell is among the overlaid curves, so every panel gets the
            # violation threshold.
            _bell_reference(ax)
            ax.set_title(f"γ̃ = {g:g}")
            ax.set_xlabel("τ")
            ax.set_ylabel("measure value")
        axes[0].legend(loc="upper right", fontsize=9)
    fig.suptitle(f"Figure {spec.figure_number}")
    return fig


def render(spec: FigureSpec) -> dict[str, str]:
    """Render a spec to ``<output>.svg`` and ``<output>.png``.

    Returns {"svg": path, "png": path}.
    """
    with plt.rc_context({"svg.hashsalt": SVG_HASHSALT}):
        fig = build_figure(spec)
        svg_path = spec.output + ".svg"
        png_path = spec.output + ".png"
        try:
            fig.savefig(svg_path, format="svg", metadata={"Date": None})
            fig.savefig(png_path, format="png", dpi=PNG_DPI)
        finally:
            plt.close(fig)
    return {"svg": svg_path, "png": png_path}
