"""Coin operators for D-level coins: rotation generators and encodings.

The coin space carries a spin s = (D-1)/2 representation.  The z
generator is diagonal with eigenvalues s, s-1, ..., -s in that order,
so coin index 0 always has the largest generator eigenvalue.  The
phase is encoded by C_n(theta) = exp(-i theta T_n) for n in {x, y, z}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDimension, NonFiniteParameter

AXES = ("x", "y", "z")

# eigenvector sign convention: first component larger than this is
# rotated to the positive real axis
_PHASE_EPS = 1e-9


def _check_dim(coin_dim: int) -> None:
    if not isinstance(coin_dim, (int, np.integer)) or coin_dim < 2:
        raise InvalidDimension(f"coin dimension must be an integer >= 2, got {coin_dim!r}")


def _check_axis(axis: str) -> None:
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}, got {axis!r}")


def spin_generators(coin_dim: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (t_x, t_y, t_z) satisfying [t_a, t_b] = i eps_abc t_c.

    t_z is diagonal with entries s, s-1, ..., -s for s = (coin_dim-1)/2.
    t_x and t_y come from the ladder operators with the standard
    sqrt(s(s+1) - m(m+1)) matrix elements.
    """
    _check_dim(coin_dim)
    s = (coin_dim - 1) / 2
    m = s - np.arange(coin_dim)
    t_z = np.diag(m).astype(complex)
    raising = np.zeros((coin_dim, coin_dim), dtype=complex)
    for k in range(1, coin_dim):
        raising[k - 1, k] = np.sqrt(s * (s + 1) - m[k] * (m[k] + 1))
    lowering = raising.conj().T
    t_x = (raising + lowering) / 2
    t_y = (raising - lowering) / 2j
    return t_x, t_y, t_z


def generator(axis: str, coin_dim: int) -> np.ndarray:
    """The rotation generator T_axis."""
    _check_axis(axis)
    t_x, t_y, t_z = spin_generators(coin_dim)
    return {"x": t_x, "y": t_y, "z": t_z}[axis]


def _eigensystem(axis: str, coin_dim: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and phase-fixed eigenvectors of T_axis."""
    t = generator(axis, coin_dim)
    w, v = np.linalg.eigh(t)
    order = np.argsort(-w)
    w, v = w[order], v[:, order]
    for c in range(coin_dim):
        col = v[:, c]
        lead = col[np.argmax(np.abs(col) > _PHASE_EPS)]
        v[:, c] = col * (abs(lead) / lead)
    return w, v


def coin_matrix(axis: str, theta: float, coin_dim: int) -> np.ndarray:
    """Unitary coin C_axis(theta) = exp(-i theta T_axis)."""
    _check_axis(axis)
    _check_dim(coin_dim)
    if not np.isfinite(theta):
        raise NonFiniteParameter(f"theta must be finite, got {theta!r}")
    if axis == "z":
        s = (coin_dim - 1) / 2
        return np.diag(np.exp(-1j * theta * (s - np.arange(coin_dim)))).astype(complex)
    w, v = _eigensystem(axis, coin_dim)
    return (v * np.exp(-1j * theta * w)) @ v.conj().T


def coin_derivative(axis: str, theta: float, coin_dim: int) -> np.ndarray:
    """d/dtheta of coin_matrix, i.e. -i T_axis C_axis(theta)."""
    return -1j * generator(axis, coin_dim) @ coin_matrix(axis, theta, coin_dim)


def basis_change(axis: str, coin_dim: int) -> np.ndarray:
    """Unitary V with V T_z V^dag = T_axis.

    Columns are eigenvectors of T_axis ordered by descending eigenvalue,
    each with its first nonvanishing component real and positive.  For
    axis z this is the identity.
    """
    _check_axis(axis)
    _check_dim(coin_dim)
    if axis == "z":
        return np.eye(coin_dim, dtype=complex)
    _, v = _eigensystem(axis, coin_dim)
    return v


def extremal_eigenstates(axis: str, coin_dim: int) -> tuple[np.ndarray, np.ndarray]:
    """(e_min, e_max): eigenvectors of T_axis for eigenvalues -s and +s."""
    _check_axis(axis)
    _check_dim(coin_dim)
    v = basis_change(axis, coin_dim)
    return v[:, -1].copy(), v[:, 0].copy()


def coin_labels(coin_dim: int) -> tuple[int, ...]:
    """Coin labels in ascending order, matching coin index 0..D-1.

    Even D uses {-D/2, ..., -1, +1, ..., +D/2}; odd D uses the integer
    range {-s, ..., 0, ..., +s}.  Index 0 is the most negative label.
    """
    _check_dim(coin_dim)
    if coin_dim % 2 == 0:
        half = coin_dim // 2
        return tuple(range(-half, 0)) + tuple(range(1, half + 1))
    s = (coin_dim - 1) // 2
    return tuple(range(-s, s + 1))


@dataclass(frozen=True)
class CoinOperator:
    """A coin encoding: the unitary, its theta derivative, and metadata."""

    axis: str
    theta: float
    dim: int
    matrix: np.ndarray
    derivative: np.ndarray


def make_coin(axis: str, theta: float, coin_dim: int) -> CoinOperator:
    """Bundle coin_matrix and coin_derivative for one encoding."""
    return CoinOperator(
        axis=axis,
        theta=float(theta),
        dim=coin_dim,
        matrix=coin_matrix(axis, theta, coin_dim),
        derivative=coin_derivative(axis, theta, coin_dim),
    )
