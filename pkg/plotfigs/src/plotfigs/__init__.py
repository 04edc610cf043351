"""Charts for simulation results tables: information vs time."""
from .curves import CurveSet, SchemaError, curve_sets, envelope_curves, load_rows
from .render import build_figure, render_fig

__version__ = "0.1.0"

__all__ = [
    "CurveSet",
    "SchemaError",
    "build_figure",
    "curve_sets",
    "envelope_curves",
    "load_rows",
    "render_fig",
    "__version__",
]
