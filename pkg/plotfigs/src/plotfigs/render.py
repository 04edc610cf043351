"""Render grouped curves as a static line chart."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .curves import CurveSet, curve_sets, envelope_curves, load_rows

_AXIS_LABEL = {"qfi": "quantum Fisher information", "fi": "position Fisher information"}


def build_figure(rows: list[dict[str, str]], metric: str):
    """Build the figure for one metric; returns (figure, curves).

    Data curves are solid with markers; for the qfi metric the
    (D-1)^2 t^2 ceiling is overlaid dashed.
    """
    curves = curve_sets(rows, metric)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for curve in curves:
        ax.plot(curve.x, curve.y, marker="o", markersize=3, label=curve.label)
    if metric == "qfi":
        for env in envelope_curves(rows):
            ax.plot(env.x, env.y, linestyle="--", color="black", linewidth=1,
                    label=env.label, zorder=1)
    ax.set_xlabel("t")
    ax.set_ylabel(_AXIS_LABEL[metric])
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    return fig, curves


def render_fig(csv_path: str, metric: str, out_path: str) -> list[CurveSet]:
    """Chart a results CSV and write it to out_path (.png or .svg).

    Returns the curve set that was plotted, so callers can check the
    data without reopening the image.
    """
    rows = load_rows(csv_path)
    fig, curves = build_figure(rows, metric)
    try:
        fig.savefig(out_path)
    finally:
        plt.close(fig)
    return curves
