"""Walker states on a position lattice with an internal coin.

A state is stored densely as an (n_positions, coin_dim) complex array.
Positions are 0-based everywhere inside the package; file and CLI output
uses 1-based labels.  Coin index ``j`` runs over the label set in
ascending label order, so for ``coin_dim == 2`` index 0 is the ``-1``
branch and index 1 the ``+1`` branch.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonFiniteParameter, NotNormalized

NORM_TOL = 1e-12


@dataclass(frozen=True)
class WalkerState:
    """Amplitudes of a walker, plus whether they are meant to be unit norm.

    Parameters
    ----------
    amplitudes : ndarray, shape (n_positions, coin_dim)
        Complex amplitudes; the array is adopted, not copied.
    normalized : bool
        True for bona fide states.  Derivative states carry False and
        skip the unit-norm check.
    """

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise DimensionMismatch(
                f"amplitudes must be (n_positions, coin_dim), got shape {a.shape}"
            )
        if not np.all(np.isfinite(a)):
            raise NonFiniteParameter("state amplitudes must be finite")
        object.__setattr__(self, "amplitudes", a)
        if self.normalized:
            n2 = float(np.vdot(a, a).real)
            if abs(n2 - 1.0) > NORM_TOL:
                raise NotNormalized(
                    f"squared norm {n2!r} differs from 1 by more than {NORM_TOL}"
                )

    @property
    def n_positions(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def coin_dim(self) -> int:
        return self.amplitudes.shape[1]

    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


def inner_product(a: WalkerState, b: WalkerState) -> complex:
    """Hermitian inner product <a|b>, conjugate-linear in ``a``."""
    if a.amplitudes.shape != b.amplitudes.shape:
        raise DimensionMismatch(
            f"states have shapes {a.amplitudes.shape} and {b.amplitudes.shape}"
        )
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def position_distribution(s: WalkerState) -> np.ndarray:
    """Probability of finding the walker at each position.

    Traces out the coin: p(x) = sum_c |a_{x,c}|^2.  Entries are clamped
    at 0 so roundoff never produces a negative probability.
    """
    if not s.normalized:
        raise NotNormalized("position distribution needs a normalized state")
    p = np.einsum("xc,xc->x", s.amplitudes, s.amplitudes.conj()).real
    return np.maximum(p, 0.0)
