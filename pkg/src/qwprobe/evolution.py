"""Walk evolution with exact theta-derivative propagation.

One step is U = S (1 x C): coin first, then the conditional shift.
The derivative state follows the product rule,

    psi   <- U psi
    dpsi  <- U dpsi + S (1 x dC/dtheta) psi_previous

with dpsi(0) = 0, so no finite differences enter anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .coinspace import CoinOperator
from .errors import DimensionMismatch, NotNormalized
from .state import WalkerState
from .topology import ShiftOperator


@dataclass(frozen=True)
class WalkConfig:
    """A shift operator, a coin encoding, and how many steps to take."""

    shift: ShiftOperator
    coin: CoinOperator
    steps: int

    def __post_init__(self):
        if self.shift.coin_dim != self.coin.dim:
            raise DimensionMismatch(
                f"shift coin dimension {self.shift.coin_dim} != coin dimension {self.coin.dim}"
            )
        if self.steps < 0:
            raise ValueError(f"steps must be >= 0, got {self.steps}")


@dataclass(frozen=True)
class EvolvedPair:
    """A state and its exact derivative with respect to theta."""

    psi: WalkerState
    dpsi: WalkerState


def ring_size(steps: int, sigma: float = 0.0) -> int:
    """Ring large enough that the walk never self-interferes.

    The front moves one site per step in each direction; the margin
    covers the probe width plus slack: N = 2t + 6*ceil(sigma) + 16.
    """
    return 2 * steps + 6 * math.ceil(sigma) + 16


def step(cfg: WalkConfig, s: WalkerState) -> WalkerState:
    """Apply one walk step (coin, then shift) to a state."""
    if s.n_positions != cfg.shift.n_positions or s.coin_dim != cfg.shift.coin_dim:
        raise DimensionMismatch(
            f"state shape {s.amplitudes.shape} does not match shift "
            f"({cfg.shift.n_positions}, {cfg.shift.coin_dim})"
        )
    out = cfg.shift.apply(s.amplitudes @ cfg.coin.matrix.T)
    return WalkerState(out, normalized=s.normalized)


def trajectory(cfg: WalkConfig, probe: WalkerState) -> Iterator[tuple[int, EvolvedPair]]:
    """Yield (t, EvolvedPair) for t = 1 .. cfg.steps.

    The derivative is pushed through each step alongside the state, so
    a full Fisher-information trajectory costs one evolution.
    """
    if not probe.normalized:
        raise NotNormalized("the probe must be a normalized state")
    if probe.n_positions != cfg.shift.n_positions or probe.coin_dim != cfg.shift.coin_dim:
        raise DimensionMismatch(
            f"probe shape {probe.amplitudes.shape} does not match shift "
            f"({cfg.shift.n_positions}, {cfg.shift.coin_dim})"
        )
    c_t = cfg.coin.matrix.T
    dc_t = cfg.coin.derivative.T
    psi = probe.amplitudes
    dpsi = np.zeros_like(psi)
    for t in range(1, cfg.steps + 1):
        dpsi = cfg.shift.apply(dpsi @ c_t + psi @ dc_t)
        psi = cfg.shift.apply(psi @ c_t)
        yield t, EvolvedPair(WalkerState(psi), WalkerState(dpsi, normalized=False))


def evolve_with_derivative(cfg: WalkConfig, probe: WalkerState) -> EvolvedPair:
    """Evolve a probe cfg.steps times, returning the final (psi, dpsi)."""
    pair = EvolvedPair(probe, WalkerState(np.zeros_like(probe.amplitudes), normalized=False))
    for _, pair in trajectory(cfg, probe):
        pass
    return pair
