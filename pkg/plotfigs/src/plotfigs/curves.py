"""Turn a results CSV into grouped curves.

The input is the fixed results schema of the simulation engine::

    scenario,axis,D,sigma,theta,t,qfi,fi,qfi_closed,fi_closed,abs_dev

Rows are grouped into one curve per sigma (or per D when the sigma
column is empty, as in the layered-graph tables), sorted by t.  No
physics is recomputed here; the CSV is the single source of truth.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

REQUIRED_COLUMNS = ("scenario", "axis", "D", "sigma", "theta", "t", "qfi", "fi")
METRICS = ("qfi", "fi")


class SchemaError(Exception):
    """The CSV does not carry the expected results table."""


@dataclass(frozen=True)
class CurveSet:
    """One plotted curve: a group key and its (t, value) series.

    ``key`` is the group's column value as written in the CSV ("2" for
    sigma = 2); ``label`` is the legend text.  x is strictly increasing.
    """

    key: str
    label: str
    x: tuple[int, ...]
    y: tuple[float, ...]

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise SchemaError(f"curve {self.key!r}: {len(self.x)} x values, {len(self.y)} y")
        if any(b <= a for a, b in zip(self.x, self.x[1:])):
            raise SchemaError(f"curve {self.key!r}: t values are not strictly increasing")


def load_rows(path: str) -> list[dict[str, str]]:
    """Read a results CSV, checking that every required column exists."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None:
            raise SchemaError(f"{path}: empty file, no header")
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise SchemaError(f"{path}: missing column {column!r}")
        return list(reader)


def curve_sets(rows: list[dict[str, str]], metric: str) -> list[CurveSet]:
    """Group rows into curves of ``metric`` over t, one per sigma or D."""
    if metric not in METRICS:
        raise SchemaError(f"metric must be one of {METRICS}, got {metric!r}")
    if not rows:
        raise SchemaError("no data rows")
    by_sigma = all(row["sigma"] != "" for row in rows)
    group_column = "sigma" if by_sigma else "D"
    prefix = "sigma" if by_sigma else "D"
    groups: dict[str, list[tuple[int, float]]] = {}
    for row in rows:
        key = row[group_column]
        if key == "":
            raise SchemaError(f"row with empty {group_column!r} in a {group_column}-grouped table")
        try:
            point = (int(row["t"]), float(row[metric]))
        except ValueError:
            raise SchemaError(f"non-numeric t or {metric} in row {row!r}") from None
        groups.setdefault(key, []).append(point)
    out = []
    for key in sorted(groups, key=float):
        series = sorted(groups[key])
        out.append(CurveSet(
            key=key,
            label=f"{prefix} = {key}",
            x=tuple(t for t, _ in series),
            y=tuple(v for _, v in series),
        ))
    return out


def envelope_curves(rows: list[dict[str, str]]) -> list[CurveSet]:
    """Reference ceilings (D-1)^2 t^2, one per coin dimension present."""
    ts_by_dim: dict[int, set[int]] = {}
    for row in rows:
        try:
            dim = int(row["D"])
            t = int(row["t"])
        except ValueError:
            raise SchemaError(f"non-numeric D or t in row {row!r}") from None
        ts_by_dim.setdefault(dim, set()).add(t)
    out = []
    for dim in sorted(ts_by_dim):
        ts = tuple(sorted(ts_by_dim[dim]))
        scale = (dim - 1) ** 2
        label = "t^2" if scale == 1 else f"{scale} t^2"
        out.append(CurveSet(
            key=f"envelope D={dim}",
            label=label,
            x=ts,
            y=tuple(float(scale * t * t) for t in ts),
        ))
    return out
