import os

import matplotlib.pyplot as plt
import pytest

from plotfigs import build_figure, load_rows, render_fig

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
FIG1 = os.path.join(GOLDEN, "fig1.csv")
ENHANCED = os.path.join(GOLDEN, "enhanced.csv")


def lines_by_label(ax):
    return {line.get_label(): line for line in ax.get_lines()}


def test_qfi_chart_plots_the_csv_data_exactly():
    rows = load_rows(FIG1)
    fig, curves = build_figure(rows, "qfi")
    try:
        ax = fig.axes[0]
        lines = lines_by_label(ax)
        # one line per sigma plus the envelope
        assert set(lines) == {"sigma = 1", "sigma = 2", "sigma = 5", "sigma = 10", "t^2"}
        for curve in curves:
            line = lines[curve.label]
            assert tuple(float(v) for v in line.get_xdata()) == tuple(map(float, curve.x))
            assert tuple(float(v) for v in line.get_ydata()) == curve.y
        # every plotted point from the CSV, none invented
        for row in rows:
            line = lines[f"sigma = {row['sigma']}"]
            xs = list(line.get_xdata())
            assert float(row["qfi"]) == float(line.get_ydata()[xs.index(int(row["t"]))])
    finally:
        plt.close(fig)


def test_qfi_curves_stay_below_the_envelope():
    fig, curves = build_figure(load_rows(FIG1), "qfi")
    plt.close(fig)
    for curve in curves:
        for t, v in zip(curve.x, curve.y):
            assert v <= t * t + 1e-6


def test_fi_chart_has_no_envelope():
    fig, curves = build_figure(load_rows(FIG1), "fi")
    try:
        labels = set(lines_by_label(fig.axes[0]))
        assert labels == {"sigma = 1", "sigma = 2", "sigma = 5", "sigma = 10"}
    finally:
        plt.close(fig)


def test_enhanced_curve_coincides_with_its_envelope():
    rows = load_rows(ENHANCED)
    fig, curves = build_figure(rows, "qfi")
    try:
        lines = lines_by_label(fig.axes[0])
        assert set(lines) == {"D = 3", "4 t^2"}
        data = lines["D = 3"].get_ydata()
        envelope = lines["4 t^2"].get_ydata()
        for got, want in zip(data, envelope):
            assert abs(float(got) - float(want)) <= 1e-8
    finally:
        plt.close(fig)


def test_rendering_is_reproducible():
    rows = load_rows(FIG1)
    fig1, first = build_figure(rows, "qfi")
    plt.close(fig1)
    fig2, second = build_figure(rows, "qfi")
    plt.close(fig2)
    assert first == second


@pytest.mark.parametrize("ext,magic", [("png", b"\x89PNG"), ("svg", b"<?xml")])
def test_render_fig_writes_image_files(tmp_path, ext, magic):
    out = tmp_path / f"fig.{ext}"
    curves = render_fig(FIG1, "qfi", str(out))
    assert len(curves) == 4
    blob = out.read_bytes()
    assert blob.startswith(magic)
    assert len(blob) > 1000
