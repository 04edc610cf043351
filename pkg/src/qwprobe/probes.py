"""Initial walker states: localized, Gaussian, uniform, and custom.

All constructors return normalized WalkerStates.  The coin convention
is the ascending label order of ``coinspace.coin_labels``; for a qubit
coin, index 0 is the ``-1`` branch.
"""
from __future__ import annotations

import numpy as np

from .coinspace import extremal_eigenstates
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidSigma,
    NonFiniteParameter,
    NotNormalized,
)
from .state import WalkerState

_UNIT_TOL = 1e-9


def _unit(vec: np.ndarray, what: str) -> np.ndarray:
    v = np.asarray(vec, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"{what} must be a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteParameter(f"{what} must be finite")
    if abs(np.vdot(v, v).real - 1.0) > _UNIT_TOL:
        raise NotNormalized(f"{what} must have unit norm")
    return v


def _check_site(x0: int, n_positions: int) -> None:
    if not 0 <= x0 < n_positions:
        raise IndexOutOfRange(f"site {x0} outside 0..{n_positions - 1}")


def localized_probe(
    x0: int, alpha: float, gamma: float, n_positions: int, coin_dim: int = 2
) -> WalkerState:
    """Walker at one site with coin alpha|-1> + e^{i gamma} sqrt(1-alpha^2)|+1>.

    The two-branch parameterization only makes sense for a qubit coin;
    use localized_coin_probe for a general coin state.
    """
    if coin_dim != 2:
        raise DimensionMismatch("alpha/gamma parameterization needs coin_dim == 2")
    if not (np.isfinite(alpha) and np.isfinite(gamma)):
        raise NonFiniteParameter("alpha and gamma must be finite")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    coin = np.array([alpha, np.exp(1j * gamma) * np.sqrt(1.0 - alpha * alpha)])
    return localized_coin_probe(x0, coin, n_positions)


def localized_coin_probe(x0: int, coin_state: np.ndarray, n_positions: int) -> WalkerState:
    """Walker at site x0 carrying the given normalized coin state."""
    coin = _unit(coin_state, "coin state")
    _check_site(x0, n_positions)
    amps = np.zeros((n_positions, len(coin)), dtype=complex)
    amps[x0] = coin
    return WalkerState(amps)


def gaussian_probe(
    x0: int, sigma: float, coin_state: np.ndarray, n_positions: int
) -> WalkerState:
    """Gaussian envelope exp(-(x-x0)^2 / (2 sigma^2)) times coin states.

    The envelope uses the shortest ring distance to x0 and is
    normalized by the explicit lattice sum, so the state is exactly
    unit norm on any finite ring.  ``coin_state`` is either one unit
    vector shared by every site or an (n_positions, D) array of
    per-site unit vectors.
    """
    if not (np.isfinite(sigma) and sigma > 0):
        raise InvalidSigma(f"sigma must be positive and finite, got {sigma!r}")
    _check_site(x0, n_positions)
    coin = np.asarray(coin_state, dtype=complex)
    if coin.ndim == 1:
        coin = np.broadcast_to(_unit(coin, "coin state"), (n_positions, len(coin)))
    elif coin.shape[0] == n_positions and coin.ndim == 2:
        for x in range(n_positions):
            _unit(coin[x], f"coin state at site {x}")
    else:
        raise DimensionMismatch(
            f"coin_state must be (D,) or ({n_positions}, D), got {coin.shape}"
        )
    d = np.abs(np.arange(n_positions) - x0)
    d = np.minimum(d, n_positions - d)
    envelope = np.exp(-d.astype(float) ** 2 / (2.0 * sigma * sigma))
    envelope /= np.linalg.norm(envelope)
    return WalkerState(envelope[:, None] * coin)


def uniform_probe(coin_state: np.ndarray, n_positions: int) -> WalkerState:
    """Equal weight 1/sqrt(N) on every site, same coin state everywhere."""
    coin = _unit(coin_state, "coin state")
    amps = np.tile(coin / np.sqrt(n_positions), (n_positions, 1))
    return WalkerState(amps)


def custom_probe(
    sites: list[tuple[int, np.ndarray]], n_positions: int, coin_dim: int
) -> WalkerState:
    """Arbitrary profile from (site, coin amplitude vector) entries.

    Entries add up, and the total must come out normalized.
    """
    amps = np.zeros((n_positions, coin_dim), dtype=complex)
    for x, vec in sites:
        _check_site(x, n_positions)
        v = np.asarray(vec, dtype=complex)
        if v.shape != (coin_dim,):
            raise DimensionMismatch(
                f"site {x}: amplitude vector has shape {v.shape}, want ({coin_dim},)"
            )
        amps[x] += v
    return WalkerState(amps)


def optimal_coin_state(axis: str, coin_dim: int, gamma: float = 0.0) -> np.ndarray:
    """(|e_min> + e^{i gamma} |e_max>)/sqrt(2) of the axis generator.

    Equal superposition of the extremal generator eigenstates; this
    family maximizes the information a walk can pick up about theta.
    """
    if not np.isfinite(gamma):
        raise NonFiniteParameter(f"gamma must be finite, got {gamma!r}")
    e_min, e_max = extremal_eigenstates(axis, coin_dim)
    return (e_min + np.exp(1j * gamma) * e_max) / np.sqrt(2.0)
