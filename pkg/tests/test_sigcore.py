"""Tests for constellations, parameters, random streams and channel draws."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from sigcore import (
    RngStream,
    SystemParams,
    charlie_tx_point,
    charlie_tx_points,
    complex_normal,
    draw_channel,
    draw_channels,
    draw_noise,
    psk_point,
    psk_points,
    rotated_points,
    rotation,
)

ORDERS = [2, 4, 8, 16]
DRAWS = 1_000_000


class TestPskPoint:
    """Charlie's PSK alphabet S_C"""

    @pytest.mark.parametrize(
        "M, j, expected",
        [
            (4, 0, 0.70711 + 0.70711j),
            (2, 1, 0.0 - 1.0j),
            (8, 3, -0.92388 + 0.38268j),
        ],
    )
    def test_known_points(self, M, j, expected):
        np.testing.assert_allclose(psk_point(M, j), expected, atol=1e-5)

    @pytest.mark.parametrize("M", ORDERS)
    def test_unit_modulus(self, M):
        np.testing.assert_allclose(np.abs(psk_points(M)), 1.0, rtol=0, atol=1e-15)

    @pytest.mark.parametrize("M", ORDERS)
    def test_scalar_matches_vector(self, M):
        expected = np.array([psk_point(M, j) for j in range(M)])
        np.testing.assert_allclose(psk_points(M), expected, rtol=0, atol=1e-15)

    @pytest.mark.parametrize("M, j", [(4, 4), (4, -1), (8, 8)])
    def test_index_out_of_range(self, M, j):
        with pytest.raises(ValueError):
            psk_point(M, j)

    @pytest.mark.parametrize("M", [0, 1, 3, 6, 12])
    def test_order_not_power_of_two(self, M):
        with pytest.raises(ValueError):
            psk_points(M)


class TestCharlieTxPoint:
    def test_decoded_zero_is_unrotated(self):
        np.testing.assert_allclose(charlie_tx_point(4, 0, 0, 0.5), 0.70711 + 0.70711j, atol=1e-5)

    def test_decoded_one_is_rotated_and_scaled(self):
        np.testing.assert_allclose(charlie_tx_point(4, 0, 1, 0.5), 0.0 + 0.70711j, atol=1e-5)

    def test_full_power_rotation_wraps(self):
        # e^{i pi/4} e^{i 7 pi/4} = 1
        np.testing.assert_allclose(charlie_tx_point(4, 3, 1, 1.0), 1.0 + 0.0j, atol=1e-12)

    @pytest.mark.parametrize("M", ORDERS)
    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.985])
    def test_joint_constellation_moduli(self, M, alpha):
        zeros = [charlie_tx_point(M, j, 0, alpha) for j in range(M)]
        ones = [charlie_tx_point(M, j, 1, alpha) for j in range(M)]
        np.testing.assert_allclose(np.abs(zeros), 1.0, atol=1e-12)
        np.testing.assert_allclose(np.abs(ones), math.sqrt(alpha), atol=1e-12)

    @pytest.mark.parametrize("M", [4, 8])
    def test_rotated_set_sits_between_neighbours(self, M):
        # the rotated points bisect the angles of S_C
        angles = np.angle(rotated_points(M, 0.5) / psk_points(M))
        np.testing.assert_allclose(angles, math.pi / M, atol=1e-12)

    def test_vectorized_matches_scalar(self):
        M, alpha = 8, 0.77
        j = np.array([0, 1, 2, 7, 7, 3])
        bits = np.array([0, 1, 1, 0, 1, 0])
        expected = [charlie_tx_point(M, int(a), int(b), alpha) for a, b in zip(j, bits)]
        np.testing.assert_allclose(charlie_tx_points(M, j, bits, alpha), expected, atol=1e-15)

    @pytest.mark.parametrize("bit", [-1, 2])
    def test_invalid_bit(self, bit):
        with pytest.raises(ValueError):
            charlie_tx_point(4, 0, bit, 0.5)

    @pytest.mark.parametrize("alpha", [-0.1, 1.5])
    def test_invalid_alpha(self, alpha):
        with pytest.raises(ValueError):
            charlie_tx_point(4, 0, 1, alpha)

    def test_rotation_angle(self):
        np.testing.assert_allclose(np.angle(rotation(8)), math.pi / 8, atol=1e-15)


class TestSystemParams:
    def test_from_snr_db(self):
        params = SystemParams.from_snr_db(alpha=0.5, psk_order=4, snr_db=35.0)
        np.testing.assert_allclose(params.noise_power, 10**-3.5, rtol=1e-14)
        np.testing.assert_allclose(params.snr_db, 35.0, rtol=1e-12)
        assert params.sigma_ac2 == 4.0

    def test_with_alpha_keeps_the_rest(self, params_35db):
        moved = params_35db.with_alpha(0.9)
        assert moved.alpha == 0.9
        assert moved.noise_power == params_35db.noise_power
        assert params_35db.alpha == 0.5

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"alpha": 0.0},
            {"alpha": 1.0},
            {"psk_order": 6},
            {"psk_order": 1},
            {"noise_power": 0.0},
            {"noise_power": math.inf},
            {"sigma_ac2": 0.5},
        ],
    )
    def test_invalid(self, kwargs):
        values = {"alpha": 0.5, "psk_order": 4, "noise_power": 0.01} | kwargs
        with pytest.raises(ValidationError):
            SystemParams(**values)

    def test_frozen(self, params_35db):
        with pytest.raises(ValidationError):
            params_35db.alpha = 0.9


class TestRngStream:
    def test_same_seed_same_stream(self):
        a = RngStream(7, 1, 2).standard_normal(1000)
        b = RngStream(7, 1, 2).standard_normal(1000)
        np.testing.assert_array_equal(a, b)

    def test_keys_give_distinct_streams(self):
        a = RngStream(7, 0).standard_normal(1000)
        b = RngStream(7, 1).standard_normal(1000)
        assert not np.array_equal(a, b)

    def test_child_is_the_extended_key(self):
        parent = RngStream(11, 3)
        np.testing.assert_array_equal(
            parent.child(4).integers(0, 100, 50), RngStream(11, 3, 4).integers(0, 100, 50)
        )

    def test_negative_seed(self):
        with pytest.raises(ValueError):
            RngStream(-1)


class TestDraws:
    """CN(0, v): E|z|^2 = v, re and im uncorrelated with equal variance"""

    @pytest.mark.parametrize("variance", [0.1, 1.0, 4.0])
    def test_complex_normal_moments(self, variance):
        z = complex_normal(RngStream(1), variance, DRAWS)
        power = np.abs(z) ** 2
        # Var(|z|^2) = v^2 for CN(0, v)
        tolerance = 6.0 * variance / math.sqrt(DRAWS)
        assert abs(power.mean() - variance) < tolerance
        assert abs(z.mean()) < 6.0 * math.sqrt(variance / DRAWS)
        np.testing.assert_allclose(np.var(z.real), variance / 2.0, rtol=0.01)
        np.testing.assert_allclose(np.var(z.imag), variance / 2.0, rtol=0.01)
        assert abs(np.corrcoef(z.real, z.imag)[0, 1]) < 6.0 / math.sqrt(DRAWS)

    def test_channel_variances(self, params_35db):
        channel = draw_channels(params_35db, RngStream(2), DRAWS)
        np.testing.assert_allclose(np.mean(np.abs(channel.h_ac) ** 2), 4.0, atol=0.04)
        np.testing.assert_allclose(np.mean(np.abs(channel.h_cb) ** 2), 1.0, atol=0.01)
        np.testing.assert_allclose(np.mean(np.abs(channel.h_ab) ** 2), 1.0, atol=0.01)

    def test_channels_are_independent(self, params_35db):
        channel = draw_channels(params_35db, RngStream(3), DRAWS)
        corr = np.corrcoef(np.abs(channel.h_cb) ** 2, np.abs(channel.h_ab) ** 2)[0, 1]
        assert abs(corr) < 6.0 / math.sqrt(DRAWS)

    def test_scalar_draws_are_complex(self, params_35db, rng):
        channel = draw_channel(params_35db, rng)
        assert all(isinstance(h, complex) for h in (channel.h_ac, channel.h_cb, channel.h_ab))
        assert isinstance(draw_noise(params_35db.noise_power, rng), complex)

    def test_draws_are_reproducible(self, params_35db):
        a = draw_channels(params_35db, RngStream(5, 9), 100)
        b = draw_channels(params_35db, RngStream(5, 9), 100)
        np.testing.assert_array_equal(a.h_ac, b.h_ac)
        np.testing.assert_array_equal(a.h_cb, b.h_cb)

    @pytest.mark.parametrize("variance", [0.0, -1.0])
    def test_non_positive_variance(self, variance, rng):
        with pytest.raises(ValueError):
            complex_normal(rng, variance)
