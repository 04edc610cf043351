import numpy as np
import pytest

from qwprobe import (
    DimensionMismatch,
    InvalidSigma,
    NotNormalized,
    custom_probe,
    extremal_eigenstates,
    gaussian_probe,
    generator,
    localized_coin_probe,
    localized_probe,
    optimal_coin_state,
    position_distribution,
    uniform_probe,
)


def test_localized_probe_places_weight_on_one_site():
    s = localized_probe(3, alpha=0.6, gamma=0.0, n_positions=8)
    p = position_distribution(s)
    assert p[3] == pytest.approx(1.0)
    assert s.amplitudes[3, 0] == pytest.approx(0.6)
    assert abs(s.amplitudes[3, 1]) == pytest.approx(np.sqrt(1 - 0.36))


def test_localized_probe_phase():
    s = localized_probe(0, alpha=0.5, gamma=np.pi / 3, n_positions=4)
    beta = s.amplitudes[0, 1]
    assert np.angle(beta) == pytest.approx(np.pi / 3)


def test_localized_probe_alpha_range():
    with pytest.raises(ValueError):
        localized_probe(0, alpha=1.5, gamma=0.0, n_positions=4)
    with pytest.raises(ValueError):
        localized_probe(0, alpha=-0.1, gamma=0.0, n_positions=4)


def test_localized_probe_is_qubit_only():
    with pytest.raises(DimensionMismatch):
        localized_probe(0, alpha=1.0, gamma=0.0, n_positions=4, coin_dim=3)


def test_localized_coin_probe_general_dimension():
    coin = np.array([1, 1j, -1]) / np.sqrt(3)
    s = localized_coin_probe(2, coin, n_positions=5)
    np.testing.assert_allclose(s.amplitudes[2], coin, atol=1e-15)
    assert position_distribution(s)[2] == pytest.approx(1.0)


def test_localized_coin_probe_rejects_unnormalized_coin():
    with pytest.raises(NotNormalized):
        localized_coin_probe(0, np.array([1.0, 1.0]), n_positions=4)


def test_gaussian_probe_is_normalized_and_symmetric():
    s = gaussian_probe(8, sigma=2.0, coin_state=np.array([1.0, 0.0]), n_positions=17)
    assert s.norm_squared() == pytest.approx(1.0, abs=1e-12)
    p = position_distribution(s)
    # even about the center, using ring distance
    for k in range(1, 8):
        assert p[8 + k] == pytest.approx(p[8 - k], abs=1e-14)
    assert p[8] == p.max()


def test_gaussian_probe_wraps_with_minimal_image():
    # center at 0 on a small ring: site n-1 is distance 1 away, not n-1
    s = gaussian_probe(0, sigma=1.0, coin_state=np.array([1.0, 0.0]), n_positions=9)
    p = position_distribution(s)
    assert p[8] == pytest.approx(p[1], abs=1e-14)


def test_gaussian_probe_narrow_limit_is_localized():
    s = gaussian_probe(4, sigma=1e-4, coin_state=np.array([0.0, 1.0]), n_positions=9)
    p = position_distribution(s)
    assert p[4] == pytest.approx(1.0, abs=1e-12)


def test_gaussian_probe_wide_limit_is_uniform():
    n = 16
    s = gaussian_probe(0, sigma=1e6, coin_state=np.array([1.0, 0.0]), n_positions=n)
    p = position_distribution(s)
    np.testing.assert_allclose(p, np.full(n, 1 / n), atol=1e-8)


def test_gaussian_probe_rejects_bad_sigma():
    with pytest.raises(InvalidSigma):
        gaussian_probe(0, sigma=0.0, coin_state=np.array([1.0, 0.0]), n_positions=8)
    with pytest.raises(InvalidSigma):
        gaussian_probe(0, sigma=-2.0, coin_state=np.array([1.0, 0.0]), n_positions=8)


def test_gaussian_probe_per_site_coins():
    n = 6
    coins = np.zeros((n, 2), dtype=complex)
    coins[:, 0] = 1.0
    coins[3] = np.array([0, 1.0])
    s = gaussian_probe(3, sigma=1.5, coin_state=coins, n_positions=n)
    assert s.norm_squared() == pytest.approx(1.0, abs=1e-12)
    assert abs(s.amplitudes[3, 0]) == 0.0


def test_uniform_probe():
    s = uniform_probe(np.array([1.0, 0.0]), n_positions=10)
    p = position_distribution(s)
    np.testing.assert_allclose(p, np.full(10, 0.1), atol=1e-15)


def test_custom_probe_accumulates_sites():
    s = custom_probe(
        [(0, np.array([0.6, 0.0])), (2, np.array([0.0, 0.8]))],
        n_positions=4,
        coin_dim=2,
    )
    p = position_distribution(s)
    assert p[0] == pytest.approx(0.36)
    assert p[2] == pytest.approx(0.64)


def test_custom_probe_rejects_unnormalized_total():
    with pytest.raises(NotNormalized):
        custom_probe([(0, np.array([0.5, 0.0]))], n_positions=3, coin_dim=2)


def test_optimal_coin_state_is_balanced_extremal_superposition():
    for d in (2, 3, 5):
        for axis in ("x", "y", "z"):
            v = optimal_coin_state(axis, d, gamma=0.7)
            lo, hi = extremal_eigenstates(axis, d)
            want = (lo + np.exp(1j * 0.7) * hi) / np.sqrt(2)
            np.testing.assert_allclose(v, want, atol=1e-12)
            # zero mean, maximal variance of the generator
            t = generator(axis, d)
            mean = np.vdot(v, t @ v)
            var = np.vdot(v, t @ t @ v) - mean**2
            assert abs(mean) < 1e-12
            assert var.real == pytest.approx((d - 1) ** 2 / 4, abs=1e-12)
