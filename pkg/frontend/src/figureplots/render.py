"""Render sweep CSV files into figure images.

The input contract is the CSV layout written by the photonlimits CLI:
a sweep column followed by per-series groups of four columns (upper,
lower, small parameter, status) for fig2/fig3/fig5/fig6, or the fixed
five-column effective-width layout for fig4.  Every plotted number comes
straight from the CSV; nothing is recomputed here.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5", "fig6")

AXIS_LABELS = {
    "fig2": ("carrier-delay product", "fidelity bound"),
    "fig3": ("carrier-width product", "fidelity bound"),
    "fig4": ("seed carrier-width product", "effective carrier-width product"),
    "fig5": ("carrier-delay product", "fidelity bound"),
    "fig6": ("carrier-width product", "fidelity bound"),
}

LOG_X = {"fig3", "fig4", "fig6"}


class RenderError(Exception):
    """Raised on malformed input or an empty CSV body."""


@dataclass(frozen=True)
class FigureSpec:
    """One rendering job: which figure, from which CSV, to which image."""

    figure_id: str
    csv_path: str
    out_path: str

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise RenderError(f"unknown figure id {self.figure_id!r}")
        if not self.out_path.lower().endswith((".png", ".svg")):
            raise RenderError(
                f"output must be a .png or .svg path, got {self.out_path!r}"
            )


@dataclass
class SeriesData:
    """One bound-curve pair extracted from a sweep table."""

    tag: str
    x: np.ndarray = field(repr=False)
    upper: np.ndarray = field(repr=False)
    lower: np.ndarray = field(repr=False)
    n_infeasible: int = 0


@dataclass
class SweepTableData:
    header: list[str]
    sweep: np.ndarray = field(repr=False)
    cells: list[list[str]] = field(repr=False)


def parse_sweep_csv(path: str) -> SweepTableData:
    """Read a sweep CSV, reporting the line number of any malformed row."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise RenderError(f"{path}: file is empty")
    header = lines[0].split(",")
    if len(header) < 2:
        raise RenderError(f"{path}: line 1: header has fewer than two columns")
    body = [line for line in lines[1:] if line.strip()]
    if not body:
        raise RenderError(f"{path}: no data rows after the header")
    sweep = np.empty(len(body))
    cells = []
    for i, line in enumerate(body):
        lineno = i + 2
        parts = line.split(",")
        if len(parts) != len(header):
            raise RenderError(
                f"{path}: line {lineno}: expected {len(header)} columns, "
                f"got {len(parts)}"
            )
        try:
            sweep[i] = float(parts[0])
        except ValueError as exc:
            raise RenderError(
                f"{path}: line {lineno}: bad sweep value {parts[0]!r}"
            ) from exc
        cells.append(parts)
    return SweepTableData(header, sweep, cells)


def extract_series(table: SweepTableData) -> list[SeriesData]:
    """Split a bound-sweep table into per-series curve pairs.

    Rows whose status cell is not "ok" are omitted from the curves and
    counted so the legend can note the omission.
    """
    out = []
    upper_cols = [
        c for c, h in enumerate(table.header) if h.startswith("upper_")
    ]
    for c in upper_cols:
        tag = table.header[c][len("upper_") :]
        if (
            c + 3 >= len(table.header)
            or table.header[c + 1] != f"lower_{tag}"
            or not table.header[c + 3].startswith("status")
        ):
            raise RenderError(
                f"header group for series {tag!r} does not match the contract"
            )
        ok = np.array([row[c + 3] == "ok" for row in table.cells])
        upper = np.array(
            [float(row[c]) if k else np.nan for row, k in zip(table.cells, ok)]
        )
        lower = np.array(
            [
                float(row[c + 1]) if k else np.nan
                for row, k in zip(table.cells, ok)
            ]
        )
        out.append(
            SeriesData(
                tag,
                table.sweep[ok],
                upper[ok],
                lower[ok],
                n_infeasible=int(np.sum(~ok)),
            )
        )
    if not out:
        raise RenderError("no series columns found in header")
    return out


def _tag_label(tag: str) -> str:
    if tag.startswith("ws"):
        return "width " + tag[2:].replace("p", ".")
    if tag.startswith("ts"):
        return "delay/width " + tag[2:].replace("p", ".")
    return tag


def _render_bounds(spec: FigureSpec, table: SweepTableData):
    series = extract_series(table)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    skipped = 0
    for i, s in enumerate(series):
        color = f"C{i}"
        ax.plot(s.x, s.upper, color=color, label=f"upper, {_tag_label(s.tag)}")
        ax.plot(
            s.x,
            s.lower,
            color=color,
            linestyle="--",
            label=f"lower, {_tag_label(s.tag)}",
        )
        skipped += s.n_infeasible
    if spec.figure_id in LOG_X:
        ax.set_xscale("log")
    xlab, ylab = AXIS_LABELS[spec.figure_id]
    ax.set_xlabel(xlab)
    ax.set_ylabel(ylab)
    title = spec.figure_id
    if skipped:
        title += f" ({skipped} infeasible rows omitted)"
    ax.set_title(title)
    ax.legend(fontsize=8)
    return fig


def _render_effective_width(spec: FigureSpec, table: SweepTableData):
    expected = [
        "omega0_sigma_pre",
        "omega0_eff_sigma_eff",
        "omega0_eff",
        "sigma_eff",
        "status",
    ]
    if table.header != expected:
        raise RenderError("fig4 header does not match the contract")
    ok = np.array([row[4] == "ok" for row in table.cells])
    prods = np.array(
        [float(row[1]) if k else np.nan for row, k in zip(table.cells, ok)]
    )
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(table.sweep[ok], prods[ok], color="C0")
    ax.set_xscale("log")
    xlab, ylab = AXIS_LABELS["fig4"]
    ax.set_xlabel(xlab)
    ax.set_ylabel(ylab)
    title = spec.figure_id
    skipped = int(np.sum(~ok))
    if skipped:
        title += f" ({skipped} infeasible rows omitted)"
    ax.set_title(title)
    return fig


def render(spec: FigureSpec) -> str:
    """Render one figure and return the output path."""
    table = parse_sweep_csv(spec.csv_path)
    if spec.figure_id == "fig4":
        fig = _render_effective_width(spec, table)
    else:
        fig = _render_bounds(spec, table)
    try:
        fig.savefig(spec.out_path)
    finally:
        plt.close(fig)
    return spec.out_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="figureplots", description="Render sweep CSVs into figure images"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure from a CSV")
    p.add_argument("figure_id", choices=FIGURE_IDS)
    p.add_argument("csv_path")
    p.add_argument("out_path")
    args = parser.parse_args(argv)
    try:
        out = render(FigureSpec(args.figure_id, args.csv_path, args.out_path))
    except (RenderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
