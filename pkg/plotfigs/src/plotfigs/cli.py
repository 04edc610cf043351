"""plot_fig: chart a results CSV.

Usage: plot_fig <csv> --metric qfi -o fig.png
Exit codes: 0 success, 2 unreadable input or malformed table.
"""
from __future__ import annotations

import argparse
import sys

from .curves import METRICS, SchemaError
from .render import render_fig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot_fig",
        description="Plot a Fisher-information results CSV as curves over time.",
    )
    parser.add_argument("csv", help="results CSV produced by the simulation engine")
    parser.add_argument("--metric", choices=METRICS, default="qfi",
                        help="which column to plot (default: qfi)")
    parser.add_argument("-o", "--out", required=True,
                        help="output image path; format follows the extension (.png, .svg)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        curves = render_fig(args.csv, args.metric, args.out)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}: {len(curves)} {args.metric} curves "
          f"({', '.join(c.label for c in curves)})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
