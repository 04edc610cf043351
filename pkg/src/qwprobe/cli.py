"""Command-line front end.

Subcommands: simulate (one walk, one summary), line-sweep and enhanced
(canned CSV runs), check (closed-form verification, exit 1 on
deviation), graph validate, and version.  Exit codes: 0 success,
1 failed check, 2 bad configuration or unparseable input.

Positions on the command line and in printed output are 1-based;
internally everything is 0-based.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .coinspace import make_coin
from .errors import QwprobeError
from .evolution import WalkConfig, evolve_with_derivative, ring_size
from .experiments import (
    ResultRow,
    build_config,
    format_rows,
    load_config,
    run_closed_form_check,
    run_enhanced_table,
    run_line_sweep,
    write_csv,
)
from .metrology import cramer_rao, position_fi, qfi_pure
from .probes import gaussian_probe, localized_coin_probe, localized_probe, optimal_coin_state
from .topology import enhanced_graph, line_graph, parse_graph, shift_from_graph


def _add_sweep_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="key=value config file; flags override it")
    p.add_argument("--axis", choices=("x", "y", "z"))
    p.add_argument("--theta", help="comma-separated angles")
    p.add_argument("--sigma", help="comma-separated Gaussian widths")
    p.add_argument("--alpha", help="comma-separated coin weights in [0,1]")
    p.add_argument("--gamma", help="comma-separated coin phases")
    p.add_argument("--dim", type=int, help="coin dimension D")
    p.add_argument("--t-max", "--steps", dest="t_max", type=int, help="number of steps")
    p.add_argument("--n", type=int, help="pin the ring size instead of auto-sizing")
    p.add_argument("--x0", type=int, help="probe center, 1-based")
    p.add_argument("--coin", choices=("minus", "optimal"), help="probe coin state")
    p.add_argument("--m", type=int, help="measurement repetitions for bounds")
    p.add_argument("-o", "--out", help="CSV output path (default: stdout)")


def _overrides(args: argparse.Namespace, scenario: str) -> dict:
    keys = ("axis", "theta", "sigma", "alpha", "gamma", "dim",
            "t_max", "n", "x0", "coin", "m", "out")
    raw = {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}
    raw["scenario"] = scenario
    return raw


def _config_from(args: argparse.Namespace, scenario: str):
    raw = _overrides(args, scenario)
    if args.config:
        return load_config(args.config, raw)
    return build_config(raw)


def _emit(rows: list[ResultRow], out: str | None) -> None:
    if out:
        write_csv(rows, out)
        print(f"wrote {len(rows)} rows to {out}")
    else:
        sys.stdout.write(format_rows(rows))


def _cmd_line_sweep(args: argparse.Namespace) -> int:
    cfg = _config_from(args, "line_sweep")
    _emit(run_line_sweep(cfg), cfg.out)
    return 0


def _cmd_enhanced(args: argparse.Namespace) -> int:
    cfg = _config_from(args, "enhanced_table")
    _emit(run_enhanced_table(cfg), cfg.out)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    cfg = _config_from(args, "closed_form_check")
    outcome = run_closed_form_check(cfg)
    if cfg.out:
        write_csv(outcome.rows, cfg.out)
    verdict = "PASS" if outcome.passed else "FAIL"
    print(f"closed-form check: {len(outcome.rows)} comparisons, "
          f"max |deviation| = {outcome.max_abs_dev:.3e} -> {verdict}")
    return 0 if outcome.passed else 1


def _cmd_simulate(args: argparse.Namespace) -> int:
    dim = args.dim
    steps = args.t_max if args.t_max is not None else 10
    sigma = args.sigma
    if args.topology == "enhanced":
        graph = enhanced_graph(dim, steps)
        n = graph.n_vertices
    elif args.topology == "line":
        n = args.n if args.n is not None else ring_size(steps, sigma or 0.0)
        graph = line_graph(n, dim)
    else:
        with open(args.topology, encoding="utf-8") as fh:
            graph = parse_graph(fh.read())
        n, dim = graph.n_vertices, graph.coin_dim
    if args.x0 is not None:
        if not 1 <= args.x0 <= n:
            raise QwprobeError(f"x0 must be in 1..{n}")
        x0 = args.x0 - 1
    else:
        x0 = 0 if args.topology == "enhanced" else n // 2

    coin_kind = args.coin or ("optimal" if args.topology == "enhanced" or dim != 2 else "alpha")
    if coin_kind == "alpha":
        coin_vec = None
    elif coin_kind == "minus":
        coin_vec = np.zeros(dim, dtype=complex)
        coin_vec[0] = 1.0
    else:
        coin_vec = optimal_coin_state(args.axis, dim, args.gamma)

    if sigma is not None:
        vec = coin_vec
        if vec is None:
            vec = localized_probe(0, args.alpha, args.gamma, 1).amplitudes[0]
        probe = gaussian_probe(x0, sigma, vec, n)
    elif coin_vec is None:
        probe = localized_probe(x0, args.alpha, args.gamma, n, dim)
    else:
        probe = localized_coin_probe(x0, coin_vec, n)

    walk = WalkConfig(shift_from_graph(graph), make_coin(args.axis, args.theta, dim), steps)
    pair = evolve_with_derivative(walk, probe)
    qfi = qfi_pure(pair.psi, pair.dpsi)
    fi = position_fi(pair.psi, pair.dpsi)
    print(f"topology={args.topology} D={dim} axis={args.axis} "
          f"theta={args.theta:.6g} t={steps}")
    print(f"qfi = {qfi:.12g}")
    print(f"fi  = {fi:.12g}")
    for name, value in ("quantum", qfi), ("position", fi):
        if value > 0:
            print(f"var >= {cramer_rao(value, args.m):.6g}  ({name}, M={args.m})")
    if args.out:
        row = ResultRow("custom", args.axis, dim, sigma, args.theta, steps, qfi, fi)
        write_csv([row], args.out)
        print(f"wrote 1 row to {args.out}")
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    with open(args.file, encoding="utf-8") as fh:
        graph = parse_graph(fh.read())
    print(f"OK: {graph.n_vertices} vertices, D={graph.coin_dim}, "
          f"{len(graph.edges)} edges")
    return 0


def _cmd_version(args: argparse.Namespace) -> int:
    print(f"qwprobe {__version__}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwprobe",
        description="Quantum-walk phase probing: simulate walks and "
                    "report Fisher information.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one walk and print its information yield")
    p.add_argument("--topology", default="line",
                   help="'line', 'enhanced', or a graph file path")
    p.add_argument("--dim", type=int, default=2, help="coin dimension D")
    p.add_argument("--axis", choices=("x", "y", "z"), default="y")
    p.add_argument("--theta", type=float, default=np.pi / 2)
    p.add_argument("--t-max", "--steps", dest="t_max", type=int, help="number of steps")
    p.add_argument("--alpha", type=float, default=1 / np.sqrt(2))
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--sigma", type=float, help="Gaussian width (omit for a localized probe)")
    p.add_argument("--n", type=int, help="pin the ring size")
    p.add_argument("--x0", type=int, help="probe center, 1-based")
    p.add_argument("--coin", choices=("alpha", "minus", "optimal"))
    p.add_argument("--m", type=int, default=1)
    p.add_argument("-o", "--out", help="also write the result as a one-row CSV")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("line-sweep", help="(Q)FI vs time per Gaussian width, as CSV")
    _add_sweep_flags(p)
    p.set_defaults(func=_cmd_line_sweep)

    p = sub.add_parser("enhanced", help="layered-graph saturation table, as CSV")
    _add_sweep_flags(p)
    p.set_defaults(func=_cmd_enhanced)

    p = sub.add_parser("check", help="verify simulations against closed forms")
    _add_sweep_flags(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("graph", help="graph file utilities")
    gsub = p.add_subparsers(dest="graph_command", required=True)
    g = gsub.add_parser("validate", help="parse a graph file and report its shape")
    g.add_argument("file")
    g.set_defaults(func=_cmd_graph)

    p = sub.add_parser("version", help="print the package version")
    p.set_defaults(func=_cmd_version)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QwprobeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
