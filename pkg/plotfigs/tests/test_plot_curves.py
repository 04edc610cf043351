import os

import pytest

from plotfigs import CurveSet, SchemaError, curve_sets, envelope_curves, load_rows

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
FIG1 = os.path.join(GOLDEN, "fig1.csv")
ENHANCED = os.path.join(GOLDEN, "enhanced.csv")


def test_load_rows_reads_the_schema():
    rows = load_rows(FIG1)
    assert len(rows) == 80
    assert rows[0]["scenario"] == "line_sweep"
    assert set(rows[0]) >= {"sigma", "t", "qfi", "fi"}


def test_load_rows_names_the_missing_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("scenario,axis,D,sigma,theta,t,fi\nx,y,2,1,0.5,1,0.5\n")
    with pytest.raises(SchemaError) as ei:
        load_rows(str(path))
    assert "'qfi'" in str(ei.value)


def test_load_rows_rejects_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(SchemaError):
        load_rows(str(path))


def test_curves_group_by_sigma():
    curves = curve_sets(load_rows(FIG1), "qfi")
    assert [c.key for c in curves] == ["1", "2", "5", "10"]  # numeric order
    assert [c.label for c in curves] == [
        "sigma = 1", "sigma = 2", "sigma = 5", "sigma = 10",
    ]
    for c in curves:
        assert c.x == tuple(range(1, 21))


def test_curve_values_are_exactly_the_csv_values():
    rows = load_rows(FIG1)
    for metric in ("qfi", "fi"):
        curves = {c.key: c for c in curve_sets(rows, metric)}
        for row in rows:
            curve = curves[row["sigma"]]
            assert curve.y[curve.x.index(int(row["t"]))] == float(row[metric])


def test_curves_group_by_dimension_when_sigma_is_empty():
    curves = curve_sets(load_rows(ENHANCED), "qfi")
    assert len(curves) == 1
    assert curves[0].label == "D = 3"
    assert curves[0].x == tuple(range(1, 13))


def test_unknown_metric_rejected():
    with pytest.raises(SchemaError):
        curve_sets(load_rows(FIG1), "theta")


def test_no_rows_rejected():
    with pytest.raises(SchemaError):
        curve_sets([], "qfi")


def test_duplicate_time_in_a_group_rejected(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text(
        "scenario,axis,D,sigma,theta,t,qfi,fi,qfi_closed,fi_closed,abs_dev\n"
        "line_sweep,y,2,1,0.5,1,1,0.5,,,\n"
        "line_sweep,y,2,1,0.7,1,2,0.5,,,\n"
    )
    with pytest.raises(SchemaError) as ei:
        curve_sets(load_rows(str(path)), "qfi")
    assert "strictly increasing" in str(ei.value)


def test_curveset_validates_lengths():
    with pytest.raises(SchemaError):
        CurveSet("1", "sigma = 1", (1, 2), (1.0,))


def test_envelope_is_scaled_square():
    env = envelope_curves(load_rows(FIG1))
    assert len(env) == 1
    assert env[0].label == "t^2"
    assert env[0].y == tuple(float(t * t) for t in env[0].x)

    env = envelope_curves(load_rows(ENHANCED))
    assert env[0].label == "4 t^2"
    assert env[0].y == tuple(float(4 * t * t) for t in env[0].x)
