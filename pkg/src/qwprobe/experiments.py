"""Canned experiment runs and their CSV results table.

Three scenarios cover the standard studies: ``line_sweep`` traces
(Q)FI over time for a family of Gaussian probe widths on a ring,
``enhanced_table`` tabulates the layered-graph saturation values, and
``closed_form_check`` re-derives simulated numbers from the closed
forms and flags any disagreement.

Configuration is flat ``key=value`` text; list-valued keys take comma
syntax (``sigma=1,2,5,10``).  Every key can be overridden by the CLI
flag of the same name.  Results go to one CSV schema::

    scenario,axis,D,sigma,theta,t,qfi,fi,qfi_closed,fi_closed,abs_dev

written UTF-8 with LF line endings and 12 significant digits, so a
given config produces byte-identical output no matter how many workers
ran the sweep (QWPROBE_WORKERS caps the pool).
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import coinspace
from .errors import ConfigError
from .evolution import WalkConfig, ring_size, trajectory
from .metrology import enhanced_max, max_qfi_line_xy, position_fi, qfi_pure
from .probes import gaussian_probe, localized_coin_probe, localized_probe, optimal_coin_state
from .topology import enhanced_graph, line_graph, shift_from_graph

CSV_HEADER = "scenario,axis,D,sigma,theta,t,qfi,fi,qfi_closed,fi_closed,abs_dev"
CHECK_TOL = 1e-8

SCENARIOS = ("line_sweep", "enhanced_table", "closed_form_check", "custom")
COIN_CHOICES = ("minus", "optimal")

_LIST_KEYS = ("theta", "sigma", "alpha", "gamma")
_INT_KEYS = ("dim", "t_max", "n", "x0", "m")
_STR_KEYS = ("scenario", "axis", "coin", "out")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a canned run needs; built by :func:`build_config`."""

    scenario: str = "line_sweep"
    axis: str = "y"
    thetas: tuple[float, ...] = (math.pi / 2,)
    sigmas: tuple[float, ...] = (1.0, 2.0, 5.0, 10.0)
    alphas: tuple[float, ...] = (0.0, 0.25, 0.5, 1 / math.sqrt(2), 1.0)
    gammas: tuple[float, ...] = (0.0,)
    dim: int = 2
    t_max: int = 20
    n: int | None = None
    x0: int | None = None
    coin: str = "minus"
    out: str | None = None
    m_count: int = 1


@dataclass(frozen=True)
class ResultRow:
    """One CSV row.  Optional fields render as empty columns."""

    scenario: str
    axis: str
    dim: int
    sigma: float | None
    theta: float
    t: int
    qfi: float
    fi: float
    qfi_closed: float | None = None
    fi_closed: float | None = None
    abs_dev: float | None = None

    def __post_init__(self):
        if self.fi > self.qfi + 1e-8:
            raise ValueError(
                f"position information {self.fi!r} exceeds the quantum bound {self.qfi!r}"
            )


# ---------------------------------------------------------------- config

def parse_config_text(text: str) -> dict[str, str]:
    """Read flat key=value lines; '#' starts a comment."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def _floats(key: str, value) -> tuple[float, ...]:
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",") if p.strip()]
    elif np.isscalar(value):
        parts = [value]
    else:
        parts = list(value)
    try:
        vals = tuple(float(p) for p in parts)
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: expected numbers, got {value!r}") from None
    if not vals or not all(np.isfinite(vals)):
        raise ConfigError(f"{key}: expected a nonempty list of finite numbers")
    return vals


def _int(key: str, value) -> int:
    try:
        if isinstance(value, str):
            return int(value, 10)
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            return int(value)
    except ValueError:
        pass
    raise ConfigError(f"{key}: expected an integer, got {value!r}")


def build_config(raw: dict) -> ExperimentConfig:
    """Validate a raw key->value mapping into an ExperimentConfig.

    Values may be strings (from a config file or CLI) or already-typed
    Python values.  Unknown keys are rejected by name.
    """
    known = _LIST_KEYS + _INT_KEYS + _STR_KEYS
    for key in raw:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
    cfg = ExperimentConfig()
    updates: dict[str, object] = {}
    if "scenario" in raw:
        scenario = str(raw["scenario"])
        if scenario not in SCENARIOS:
            raise ConfigError(f"scenario must be one of {SCENARIOS}, got {scenario!r}")
        updates["scenario"] = scenario
    if "axis" in raw:
        axis = str(raw["axis"])
        if axis not in coinspace.AXES:
            raise ConfigError(f"axis must be one of {coinspace.AXES}, got {axis!r}")
        updates["axis"] = axis
    if "coin" in raw:
        coin = str(raw["coin"])
        if coin not in COIN_CHOICES:
            raise ConfigError(f"coin must be one of {COIN_CHOICES}, got {coin!r}")
        updates["coin"] = coin
    if "out" in raw and raw["out"] is not None:
        updates["out"] = str(raw["out"])
    for key, attr in (("theta", "thetas"), ("sigma", "sigmas"),
                      ("alpha", "alphas"), ("gamma", "gammas")):
        if key in raw:
            updates[attr] = _floats(key, raw[key])
    for key, attr in (("dim", "dim"), ("t_max", "t_max"), ("n", "n"),
                      ("x0", "x0"), ("m", "m_count")):
        if key in raw and raw[key] is not None:
            updates[attr] = _int(key, raw[key])
    cfg = replace(cfg, **updates)
    if "theta" not in raw and cfg.scenario in ("enhanced_table", "closed_form_check"):
        # a generic angle: closed forms there are theta-independent, but
        # rational multiples of pi can park a branch on exactly zero weight
        cfg = replace(cfg, thetas=(0.7,))
    if cfg.dim < 2:
        raise ConfigError(f"dim must be >= 2, got {cfg.dim}")
    if cfg.t_max < 1:
        raise ConfigError(f"t_max must be >= 1, got {cfg.t_max}")
    if cfg.m_count < 1:
        raise ConfigError(f"m must be >= 1, got {cfg.m_count}")
    if cfg.n is not None and cfg.n < 3:
        raise ConfigError(f"n must be >= 3, got {cfg.n}")
    if cfg.x0 is not None and cfg.x0 < 0:
        raise ConfigError(f"x0 must be >= 0, got {cfg.x0}")
    if not all(0.0 <= a <= 1.0 for a in cfg.alphas):
        raise ConfigError("alpha values must lie in [0, 1]")
    if not all(s > 0 for s in cfg.sigmas):
        raise ConfigError("sigma values must be positive")
    return cfg


def load_config(path: str, overrides: dict | None = None) -> ExperimentConfig:
    """Config file plus CLI overrides (overrides win)."""
    with open(path, encoding="utf-8") as fh:
        raw = parse_config_text(fh.read())
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value
    return build_config(raw)


# ---------------------------------------------------------------- workers

def worker_count(n_tasks: int) -> int:
    """Pool size: QWPROBE_WORKERS if set, else one per task up to CPU count."""
    env = os.environ.get("QWPROBE_WORKERS")
    if env is not None:
        try:
            cap = int(env, 10)
        except ValueError:
            cap = 0
        if cap < 1:
            raise ConfigError(f"QWPROBE_WORKERS must be a positive integer, got {env!r}")
        return min(cap, max(n_tasks, 1))
    return min(max(n_tasks, 1), os.cpu_count() or 1)


def _pmap(fn, items: list):
    """Map over independent tasks, possibly in a thread pool.

    Each task is computed in isolation, so results do not depend on
    scheduling; callers sort the merged rows afterwards.
    """
    if len(items) <= 1 or worker_count(len(items)) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=worker_count(len(items))) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------- runs

def _probe_coin(cfg: ExperimentConfig) -> np.ndarray:
    if cfg.coin == "optimal":
        return optimal_coin_state(cfg.axis, cfg.dim, cfg.gammas[0])
    coin = np.zeros(cfg.dim, dtype=complex)  # most negative label
    coin[0] = 1.0
    return coin


def run_line_sweep(cfg: ExperimentConfig) -> list[ResultRow]:
    """(Q)FI versus time on a ring, one trajectory per Gaussian width.

    Defaults reproduce the standard picture: y coin at theta = pi/2,
    every site in the ``-1`` coin state, widths 1, 2, 5, 10.  The ring
    is sized so the front never wraps unless ``n`` pins it.
    """
    if not cfg.sigmas:
        raise ConfigError("line_sweep needs at least one sigma")

    def one(task: tuple[float, float]) -> list[ResultRow]:
        theta, sigma = task
        n = cfg.n if cfg.n is not None else ring_size(cfg.t_max, sigma)
        x0 = cfg.x0 if cfg.x0 is not None else n // 2
        probe = gaussian_probe(x0, sigma, _probe_coin(cfg), n)
        walk = WalkConfig(
            shift_from_graph(line_graph(n, cfg.dim)),
            coinspace.make_coin(cfg.axis, theta, cfg.dim),
            cfg.t_max,
        )
        return [
            ResultRow("line_sweep", cfg.axis, cfg.dim, sigma, theta, t,
                      qfi_pure(pair.psi, pair.dpsi), position_fi(pair.psi, pair.dpsi))
            for t, pair in trajectory(walk, probe)
        ]

    tasks = [(theta, sigma) for theta in cfg.thetas for sigma in cfg.sigmas]
    rows = [row for chunk in _pmap(one, tasks) for row in chunk]
    rows.sort(key=lambda r: (r.sigma, r.t, r.theta))
    return rows


def run_enhanced_table(cfg: ExperimentConfig) -> list[ResultRow]:
    """Saturation table on the layered graph with the optimal probe.

    Each row carries the closed-form target (D-1)^2 t^2 (zero for the
    position information under the z encoding) and the worst absolute
    deviation from it.
    """
    if not 2 <= cfg.dim <= 6:
        raise ConfigError(f"enhanced_table supports 2 <= dim <= 6, got {cfg.dim}")
    theta = cfg.thetas[0]
    graph = enhanced_graph(cfg.dim, cfg.t_max)
    probe = localized_coin_probe(
        0, optimal_coin_state(cfg.axis, cfg.dim, cfg.gammas[0]), graph.n_vertices
    )
    walk = WalkConfig(
        shift_from_graph(graph), coinspace.make_coin(cfg.axis, theta, cfg.dim), cfg.t_max
    )
    rows = []
    for t, pair in trajectory(walk, probe):
        qfi = qfi_pure(pair.psi, pair.dpsi)
        fi = position_fi(pair.psi, pair.dpsi)
        qfi_closed = enhanced_max(cfg.dim, t)
        fi_closed = 0.0 if cfg.axis == "z" else qfi_closed
        rows.append(ResultRow(
            "enhanced_table", cfg.axis, cfg.dim, None, theta, t, qfi, fi,
            qfi_closed, fi_closed, max(abs(qfi - qfi_closed), abs(fi - fi_closed)),
        ))
    return rows


@dataclass(frozen=True)
class CheckOutcome:
    """Rows plus the worst deviation the closed-form check saw."""

    rows: list[ResultRow]
    max_abs_dev: float

    @property
    def passed(self) -> bool:
        return self.max_abs_dev <= CHECK_TOL


def run_closed_form_check(cfg: ExperimentConfig) -> CheckOutcome:
    """Simulate three families and compare each against its closed form.

    Qubit coin throughout:

    * z encoding on a ring over the alpha grid: simulated QFI against
      t^2 (1 - (2 alpha^2 - 1)^2); position information against 0.
    * x and y encodings on a ring at theta = pi with the optimal probe:
      simulated QFI against t^2/2 + (t mod 2)/2 for t = 1 .. t_max.
    * x, y, z on the layered graph over the (alpha, gamma) grid at
      t = t_max.
    """
    from .metrology import closed_form_enhanced, closed_form_line_z

    t_max = cfg.t_max
    gamma = cfg.gammas[0]
    rows: list[ResultRow] = []

    def line_z(alpha: float) -> ResultRow:
        n = cfg.n if cfg.n is not None else ring_size(t_max)
        x0 = cfg.x0 if cfg.x0 is not None else n // 2
        probe = localized_probe(x0, alpha, gamma, n)
        walk = WalkConfig(
            shift_from_graph(line_graph(n)), coinspace.make_coin("z", cfg.thetas[0], 2), t_max
        )
        pair = None
        for _, pair in trajectory(walk, probe):
            pass
        qfi = qfi_pure(pair.psi, pair.dpsi)
        fi = position_fi(pair.psi, pair.dpsi)
        ref = closed_form_line_z(
            np.array([alpha * alpha]), np.array([1 - alpha * alpha]), t_max
        )
        return ResultRow("closed_form_check", "z", 2, None, cfg.thetas[0], t_max,
                         qfi, fi, ref, 0.0, max(abs(qfi - ref), abs(fi - 0.0)))

    rows.extend(_pmap(line_z, list(cfg.alphas)))

    def line_xy(axis: str) -> list[ResultRow]:
        n = cfg.n if cfg.n is not None else ring_size(t_max)
        x0 = cfg.x0 if cfg.x0 is not None else n // 2
        probe = localized_coin_probe(x0, optimal_coin_state(axis, 2, gamma), n)
        walk = WalkConfig(
            shift_from_graph(line_graph(n)), coinspace.make_coin(axis, math.pi, 2), t_max
        )
        out = []
        for t, pair in trajectory(walk, probe):
            qfi = qfi_pure(pair.psi, pair.dpsi)
            fi = position_fi(pair.psi, pair.dpsi)
            ref = max_qfi_line_xy(t)
            out.append(ResultRow("closed_form_check", axis, 2, None, math.pi, t,
                                 qfi, fi, ref, None, abs(qfi - ref)))
        return out

    for chunk in _pmap(line_xy, ["x", "y"]):
        rows.extend(chunk)

    def layered(task: tuple[str, float, float]) -> ResultRow:
        axis, alpha, gam = task
        graph = enhanced_graph(2, t_max)
        probe = localized_probe(0, alpha, gam, graph.n_vertices)
        walk = WalkConfig(
            shift_from_graph(graph), coinspace.make_coin(axis, cfg.thetas[0], 2), t_max
        )
        pair = None
        for _, pair in trajectory(walk, probe):
            pass
        qfi = qfi_pure(pair.psi, pair.dpsi)
        fi = position_fi(pair.psi, pair.dpsi)
        ref = closed_form_enhanced(axis, alpha, gam, t_max)
        fi_ref = 0.0 if axis == "z" else None
        dev = abs(qfi - ref) if fi_ref is None else max(abs(qfi - ref), fi)
        return ResultRow("closed_form_check", axis, 2, None, cfg.thetas[0], t_max,
                         qfi, fi, ref, fi_ref, dev)

    grid = [(axis, alpha, gam)
            for axis in ("x", "y", "z")
            for alpha in cfg.alphas
            for gam in cfg.gammas]
    rows.extend(_pmap(layered, grid))

    max_dev = max(row.abs_dev for row in rows if row.abs_dev is not None)
    return CheckOutcome(rows, float(max_dev))


# ---------------------------------------------------------------- CSV

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def format_rows(rows: list[ResultRow]) -> str:
    """Render rows under the fixed schema, LF line endings."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(",".join(_cell(v) for v in (
            r.scenario, r.axis, r.dim, r.sigma, r.theta, r.t,
            r.qfi, r.fi, r.qfi_closed, r.fi_closed, r.abs_dev,
        )))
    return "\n".join(lines) + "\n"


def write_csv(rows: list[ResultRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_rows(rows))


def read_csv(path: str) -> list[dict[str, str]]:
    """Read a results CSV back as one dict per row (strings as written)."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ConfigError(f"{path} does not carry the results schema")
    names = CSV_HEADER.split(",")
    return [dict(zip(names, line.split(","))) for line in lines[1:] if line]
