"""Fisher information of walk states and the matching closed forms.

For a pure family |psi(theta)> the quantum Fisher information is
H = 4 (<dpsi|dpsi> - |<dpsi|psi>|^2), and the information extractable
from a position measurement alone is
F = sum_x (dp(x)/dtheta)^2 / p(x) with dp(x) = 2 Re <dpsi_x|psi_x>.
F <= H always; the closed forms below say when the gap closes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coinspace import coin_matrix, generator
from .errors import (
    DimensionMismatch,
    NonPositiveFisher,
    NotNormalized,
    TooLargeForDense,
    UnnormalizedProfile,
)
from .state import WalkerState

# positions with less probability than this are left out of the
# position-information sum (their contribution would be 0/0)
FI_PROB_FLOOR = 1e-12

_DENSE_LIMIT = 4096
_PROFILE_TOL = 1e-9


def _pair_shapes(psi: WalkerState, dpsi: WalkerState) -> None:
    if psi.amplitudes.shape != dpsi.amplitudes.shape:
        raise DimensionMismatch(
            f"state and derivative have shapes {psi.amplitudes.shape} "
            f"and {dpsi.amplitudes.shape}"
        )


def qfi_pure(psi: WalkerState, dpsi: WalkerState) -> float:
    """Quantum Fisher information of a pure state family.

    Clamped at zero: roundoff on a theta-insensitive family can land
    a hair below.
    """
    _pair_shapes(psi, dpsi)
    dd = np.vdot(dpsi.amplitudes, dpsi.amplitudes).real
    dp = np.vdot(dpsi.amplitudes, psi.amplitudes)
    return max(4.0 * float(dd - abs(dp) ** 2), 0.0)


def position_fi(psi: WalkerState, dpsi: WalkerState) -> float:
    """Fisher information of the position distribution.

    Sites with p(x) < FI_PROB_FLOOR are skipped.
    """
    _pair_shapes(psi, dpsi)
    a, da = psi.amplitudes, dpsi.amplitudes
    p = np.einsum("xc,xc->x", a, a.conj()).real
    dp = 2.0 * np.einsum("xc,xc->x", da.conj(), a).real
    keep = p >= FI_PROB_FLOOR
    return float(np.sum(dp[keep] ** 2 / p[keep]))


def sld_pure(psi: WalkerState, dpsi: WalkerState) -> np.ndarray:
    """Symmetric logarithmic derivative L = 2(|psi><dpsi| + |dpsi><psi|).

    Returns the dense (N*D, N*D) matrix; refuses to build anything
    larger than 4096 on a side.
    """
    _pair_shapes(psi, dpsi)
    n = psi.n_positions * psi.coin_dim
    if n > _DENSE_LIMIT:
        raise TooLargeForDense(f"SLD would be {n}x{n}; the dense limit is {_DENSE_LIMIT}")
    v = psi.amplitudes.reshape(n)
    dv = dpsi.amplitudes.reshape(n)
    return 2.0 * (np.outer(v, dv.conj()) + np.outer(dv, v.conj()))


def cramer_rao(fisher: float, m_measurements: int = 1) -> float:
    """Variance lower bound 1/(M * F) for M independent repetitions."""
    if m_measurements < 1:
        raise ValueError(f"measurement count must be >= 1, got {m_measurements}")
    if not fisher > 0.0:
        raise NonPositiveFisher(f"need positive Fisher information, got {fisher!r}")
    return 1.0 / (m_measurements * fisher)


def closed_form_line_z(alpha_sq: np.ndarray, beta_sq: np.ndarray, t: int) -> float:
    """QFI of the phase-only encoding on a line: t^2 (1 - (A - B)^2).

    ``alpha_sq``/``beta_sq`` are per-site weights |alpha_x|^2 and
    |beta_x|^2; A and B are their sums and must add up to 1.  Balanced
    profiles (A = B) reach t^2; the position distribution carries no
    information in this encoding, ever.
    """
    a = float(np.sum(alpha_sq))
    b = float(np.sum(beta_sq))
    if abs(a + b - 1.0) > _PROFILE_TOL:
        raise UnnormalizedProfile(f"profile weights sum to {a + b!r}, not 1")
    return t * t * (1.0 - (a - b) ** 2)


def closed_form_enhanced(axis: str, alpha: float, gamma: float, t: int) -> float:
    """QFI on the layered graph for a root probe alpha|-1> + e^{i gamma} beta|+1>.

    x encoding: t^2 (1 - 4 a^2(1-a^2) cos^2 gamma); y swaps cos for
    sin; z gives t^2 (1 - (2 a^2 - 1)^2) independent of gamma.  Qubit
    coin only.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    t2 = float(t * t)
    cross = 4.0 * alpha * alpha * (1.0 - alpha * alpha)
    if axis == "x":
        return t2 * (1.0 - cross * np.cos(gamma) ** 2)
    if axis == "y":
        return t2 * (1.0 - cross * np.sin(gamma) ** 2)
    if axis == "z":
        return t2 * (1.0 - (2.0 * alpha * alpha - 1.0) ** 2)
    raise ValueError(f"axis must be x, y, or z, got {axis!r}")


def max_qfi_line_xy(t: int) -> float:
    """Best QFI a localized probe reaches on the line for x/y encodings.

    t^2/2 + (t mod 2)/2, attained at theta = pi.
    """
    return t * t / 2.0 + (t % 2) / 2.0


def enhanced_max(coin_dim: int, t: int) -> float:
    """Saturated value (D-1)^2 t^2 on the layered graph."""
    return float((coin_dim - 1) ** 2) * t * t


def qudit_reference_qfi(axis: str, theta: float, t: int, coin_state: np.ndarray) -> float:
    """QFI of the coin-only family C_axis(theta)^t |phi>.

    A uniform probe on a ring factorizes into this single-qudit
    problem, so it doubles as the delocalized-limit reference.  Uses
    the exact derivative -i t T C(t theta)|phi>.
    """
    phi = np.asarray(coin_state, dtype=complex)
    if phi.ndim != 1:
        raise DimensionMismatch(f"coin state must be a vector, got shape {phi.shape}")
    if abs(np.vdot(phi, phi).real - 1.0) > 1e-9:
        raise NotNormalized("coin state must have unit norm")
    d = len(phi)
    psi = coin_matrix(axis, t * theta, d) @ phi
    dpsi = -1j * t * (generator(axis, d) @ psi)
    val = 4.0 * (np.vdot(dpsi, dpsi).real - abs(np.vdot(dpsi, psi)) ** 2)
    return max(float(val), 0.0)


@dataclass(frozen=True)
class FisherReport:
    """One (t, theta) observation: simulated values plus closed-form refs.

    fi can never genuinely exceed qfi; construction enforces the
    inequality up to additive 1e-8 slack.
    """

    t: int
    theta: float
    qfi: float
    fi: float
    qfi_closed: float | None = None
    fi_closed: float | None = None
    m_count: int = 1

    def __post_init__(self):
        if self.fi > self.qfi + 1e-8:
            raise ValueError(
                f"position information {self.fi!r} exceeds the quantum bound {self.qfi!r}"
            )
        if self.m_count < 1:
            raise ValueError(f"measurement count must be >= 1, got {self.m_count}")
