import numpy as np
import pytest

from qwprobe import (
    DimensionMismatch,
    NonFiniteParameter,
    NotNormalized,
    WalkerState,
    inner_product,
    position_distribution,
)

from oracles import brute_inner


def random_state(rng, n, d, normalized=True):
    a = rng.normal(size=(n, d)) + 1j * rng.normal(size=(n, d))
    if normalized:
        a /= np.linalg.norm(a)
    return WalkerState(a, normalized=normalized)


def test_inner_product_matches_elementwise_sum():
    rng = np.random.default_rng(42)
    for _ in range(10):
        a = random_state(rng, 4, 2)
        b = random_state(rng, 4, 2)
        want = brute_inner(a.amplitudes, b.amplitudes)
        assert inner_product(a, b) == pytest.approx(want, abs=1e-14)


def test_inner_product_conjugate_symmetry():
    rng = np.random.default_rng(7)
    a = random_state(rng, 6, 3)
    b = random_state(rng, 6, 3)
    assert inner_product(a, b) == pytest.approx(np.conj(inner_product(b, a)))
    assert inner_product(a, a).imag == pytest.approx(0.0, abs=1e-15)


def test_inner_product_shape_mismatch():
    rng = np.random.default_rng(0)
    with pytest.raises(DimensionMismatch):
        inner_product(random_state(rng, 4, 2), random_state(rng, 5, 2))
    with pytest.raises(DimensionMismatch):
        inner_product(random_state(rng, 4, 2), random_state(rng, 4, 3))


def test_norm_flag_is_enforced():
    good = np.zeros((3, 2), dtype=complex)
    good[1, 0] = 1.0
    WalkerState(good)  # fine
    with pytest.raises(NotNormalized):
        WalkerState(good * 2)
    # derivative-like states skip the check
    WalkerState(good * 2, normalized=False)


def test_rejects_non_finite_amplitudes():
    bad = np.zeros((3, 2), dtype=complex)
    bad[0, 0] = np.nan
    with pytest.raises(NonFiniteParameter):
        WalkerState(bad, normalized=False)
    bad[0, 0] = np.inf * 1j
    with pytest.raises(NonFiniteParameter):
        WalkerState(bad, normalized=False)


def test_rejects_bad_shapes():
    with pytest.raises(DimensionMismatch):
        WalkerState(np.ones(4, dtype=complex), normalized=False)


def test_shape_properties():
    s = WalkerState(np.full((5, 3), np.sqrt(1 / 15), dtype=complex))
    assert s.n_positions == 5
    assert s.coin_dim == 3
    assert s.norm_squared() == pytest.approx(1.0)


def test_position_distribution_traces_out_coin():
    rng = np.random.default_rng(3)
    s = random_state(rng, 8, 2)
    p = position_distribution(s)
    want = np.abs(s.amplitudes[:, 0]) ** 2 + np.abs(s.amplitudes[:, 1]) ** 2
    np.testing.assert_allclose(p, want, atol=1e-15)
    assert p.sum() == pytest.approx(1.0, abs=1e-9)
    assert np.all(p >= 0.0)


def test_position_distribution_needs_normalized_state():
    rng = np.random.default_rng(5)
    with pytest.raises(NotNormalized):
        position_distribution(random_state(rng, 4, 2, normalized=False))
