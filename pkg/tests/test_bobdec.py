"""Tests for Bob's joint decoders and the half-duplex baseline decoder."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from bobdec import (
    DecoderKind,
    NoiseVariances,
    decode_many,
    ffhd_decode,
    ffhd_decode_many,
    jd_decode,
    jmap_decode,
    jmax_decode,
    log_metrics,
    mixture_density,
)
from charlie import CrossoverProbs, crossover_probs
from sigcore import RngStream, SymbolPair, SystemParams, complex_normal, psk_points, rotated_points
from simkit import simulate_trials

JOINT_DECODERS = [jmap_decode, jmax_decode, jd_decode]
GAIN = 0.8 + 0.3j


@pytest.fixture
def params() -> SystemParams:
    return SystemParams.from_snr_db(alpha=0.5, psk_order=4, snr_db=35.0)


@pytest.fixture
def crossover(params) -> CrossoverProbs:
    return crossover_probs(params)


def linear_metrics(kind, r, h, params, crossover):
    """Reference (n, 2M) metrics straight from the Gaussian densities"""
    noise = NoiseVariances.from_params(params)
    y = h[:, None] * psk_points(params.psk_order)
    y_rot = h[:, None] * rotated_points(params.psk_order, params.alpha)
    r = r[:, None]

    def f(center, variance):
        return np.exp(-np.abs(r - center) ** 2 / variance) / (np.pi * variance)

    p = crossover.matrix
    c00, c01 = p[0, 0] * f(y, noise.nb0), p[0, 1] * f(y_rot, noise.nb0)
    c10, c11 = p[1, 0] * f(y, noise.nb1), p[1, 1] * f(y_rot, noise.nb1)
    if kind == DecoderKind.JMAP:
        return np.hstack([c00 + c01, c10 + c11])
    if kind == DecoderKind.JMAX:
        return np.hstack([np.maximum(c00, c01), np.maximum(c10, c11)])
    return np.hstack([c00, c11])


class TestDecoderKind:
    @pytest.mark.parametrize("name, kind", [("jmap", DecoderKind.JMAP), (" JD ", DecoderKind.JD)])
    def test_parse(self, name, kind):
        assert DecoderKind.parse(name) is kind

    def test_parse_unknown(self):
        with pytest.raises(ValueError, match="unknown decoder"):
            DecoderKind.parse("ML")


class TestNoiseVariances:
    def test_from_params(self, params):
        noise = NoiseVariances.from_params(params)
        assert noise.nb0 == params.noise_power
        np.testing.assert_allclose(noise.nb1, params.noise_power + 0.5, rtol=1e-15)

    def test_ordering_enforced(self):
        with pytest.raises(ValidationError):
            NoiseVariances(nb0=0.5, nb1=0.1)


class TestNoiselessDecoding:
    @pytest.mark.parametrize("M", [4, 8])
    @pytest.mark.parametrize("decode", JOINT_DECODERS)
    def test_unrotated_point(self, M, decode):
        params = SystemParams.from_snr_db(0.5, M, 35.0)
        crossover = crossover_probs(params)
        for j, point in enumerate(psk_points(M)):
            assert decode(GAIN * point, GAIN, params, crossover) == SymbolPair(0, j)

    @pytest.mark.parametrize("M", [4, 8])
    @pytest.mark.parametrize("decode", JOINT_DECODERS)
    def test_rotated_point(self, M, decode):
        params = SystemParams.from_snr_db(0.5, M, 35.0)
        crossover = crossover_probs(params)
        for j, point in enumerate(rotated_points(M, params.alpha)):
            assert decode(GAIN * point, GAIN, params, crossover) == SymbolPair(1, j)

    def test_returns_symbol_pair(self, params, crossover):
        decision = jmap_decode(GAIN, GAIN, params, crossover)
        assert isinstance(decision, SymbolPair)
        assert isinstance(decision.alice_bit, int)

    def test_deterministic(self, params, crossover):
        r = complex_normal(RngStream(9), 1.0, 500)
        first = decode_many(DecoderKind.JMAP, r, GAIN, params, crossover)
        second = decode_many(DecoderKind.JMAP, r, GAIN, params, crossover)
        np.testing.assert_array_equal(first[0], second[0])
        np.testing.assert_array_equal(first[1], second[1])


class TestLogDomain:
    """Log-domain metrics must reproduce the linear-domain decisions."""

    SAMPLES = 100_000

    @pytest.mark.parametrize("kind", [DecoderKind.JMAP, DecoderKind.JMAX, DecoderKind.JD])
    def test_matches_linear_decisions(self, kind):
        # N_o = 0.1 keeps every linear density representable
        params = SystemParams(alpha=0.6, psk_order=4, noise_power=0.1)
        crossover = crossover_probs(params)
        rng = RngStream(11)
        h = complex_normal(rng, 1.0, self.SAMPLES)
        r = complex_normal(rng, 1.5, self.SAMPLES)

        logs = log_metrics(kind, r, h, params, crossover)
        linear = linear_metrics(kind, r, h, params, crossover)
        np.testing.assert_array_equal(np.argmax(logs, axis=1), np.argmax(linear, axis=1))

    def test_mixture_density_is_exp_of_jmap_metric(self):
        params = SystemParams(alpha=0.6, psk_order=4, noise_power=0.1)
        crossover = crossover_probs(params)
        rng = RngStream(12)
        h = complex_normal(rng, 1.0, 50)
        r = complex_normal(rng, 1.5, 50)
        logs = log_metrics(DecoderKind.JMAP, r, h, params, crossover)
        for n in range(50):
            for column in range(8):
                hypothesis = SymbolPair(*divmod(column, 4))
                density = mixture_density(complex(r[n]), complex(h[n]), hypothesis, params, crossover)
                np.testing.assert_allclose(math.log(density), logs[n, column], rtol=1e-10, atol=1e-10)

    def test_scaling_invariance(self, params, crossover):
        r = complex_normal(RngStream(13), 1.0, 1000)
        logs = log_metrics(DecoderKind.JMAP, r, GAIN, params, crossover)
        for c in (1e-30, 0.5, 1e30):
            np.testing.assert_array_equal(
                np.argmax(logs + math.log(c), axis=1), np.argmax(logs, axis=1)
            )

    def test_far_samples_do_not_underflow(self, params, crossover):
        # every linear density underflows to 0 here
        logs = log_metrics(DecoderKind.JMAP, np.array([50.0 + 50.0j]), GAIN, params, crossover)
        assert np.all(np.isfinite(logs))

    def test_ffhd_rejected_by_joint_metrics(self, params, crossover):
        with pytest.raises(ValueError):
            log_metrics(DecoderKind.FFHD, np.array([1.0 + 0j]), GAIN, params, crossover)


class TestMixtureDensity:
    def test_integrates_to_one(self):
        params = SystemParams(alpha=0.5, psk_order=4, noise_power=0.1)
        crossover = crossover_probs(params)
        step = 0.02
        axis = np.arange(-4.0, 4.0, step) + step / 2.0
        re, im = np.meshgrid(axis, axis)
        grid = (re + 1j * im).ravel()
        densities = np.exp(log_metrics(DecoderKind.JMAP, grid, 1.0 + 0j, params, crossover))
        np.testing.assert_allclose(densities.sum(axis=0) * step * step, 1.0, atol=1e-3)

    def test_peak_at_own_point(self, params, crossover):
        y = psk_points(4)[2]
        peak = mixture_density(GAIN * y, GAIN, SymbolPair(0, 2), params, crossover)
        np.testing.assert_allclose(peak, crossover.p00 / (math.pi * params.noise_power), rtol=1e-12)

    @pytest.mark.parametrize("hypothesis", [SymbolPair(2, 0), SymbolPair(0, 4), SymbolPair(1, -1)])
    def test_invalid_hypothesis(self, hypothesis, params, crossover):
        with pytest.raises(ValueError):
            mixture_density(1.0 + 0j, GAIN, hypothesis, params, crossover)


class TestJointDominant:
    def test_equidistant_sample(self, params, crossover):
        """r halfway between y_0 and its rotated partner: decided by priors and variances"""
        y = psk_points(4)[0]
        y_rot = rotated_points(4, params.alpha)[0]
        r = GAIN * (y + y_rot) / 2.0
        noise = NoiseVariances.from_params(params)
        dist2 = abs(GAIN * (y - y_rot) / 2.0) ** 2
        zero = math.log(crossover.p00 / (math.pi * noise.nb0)) - dist2 / noise.nb0
        one = math.log(crossover.p11 / (math.pi * noise.nb1)) - dist2 / noise.nb1

        metrics = log_metrics(DecoderKind.JD, np.array([r]), GAIN, params, crossover)[0]
        np.testing.assert_allclose(metrics[0], zero, rtol=1e-12)
        np.testing.assert_allclose(metrics[4], one, rtol=1e-12)
        expected = SymbolPair(0, 0) if zero >= one else SymbolPair(1, 0)
        assert jd_decode(r, GAIN, params, crossover) == expected

    def test_error_free_detector_reduces_to_nearest_rotated_point(self):
        params = SystemParams.from_snr_db(0.999, 8, 30.0)
        rng = RngStream(14)
        r = complex_normal(rng, 1.0, 2000)
        alice, charlie = decode_many(DecoderKind.JD, r, GAIN, params, CrossoverProbs.identity())

        # with P00 = P11 = 1 the i=1 metrics are a nearest-neighbour rule on h e^{i pi/M} sqrt(alpha) S_C
        ones = alice == 1
        centers = GAIN * rotated_points(8, params.alpha)
        nearest = np.argmin(np.abs(r[ones, None] - centers) ** 2, axis=1)
        np.testing.assert_array_equal(charlie[ones], nearest)

    def test_agrees_with_jmap_at_high_snr(self):
        params = SystemParams.from_snr_db(0.9, 4, 35.0)
        outcome = simulate_trials(params, RngStream(15), 100_000, decoder=DecoderKind.JMAP)
        crossover = crossover_probs(params)
        jmax = decode_many(DecoderKind.JMAX, outcome.received, outcome.gain_cb, params, crossover)
        same = (jmax[0] == outcome.decoded_bit) & (jmax[1] == outcome.decoded_index)
        assert same.mean() > 0.99


class TestFfhdDecoder:
    @pytest.mark.parametrize("M", [4, 8])
    def test_noiseless(self, M):
        for j, point in enumerate(psk_points(M)):
            assert ffhd_decode(GAIN * point, GAIN, M, 1e-3) == SymbolPair(0, j)
            rotated = np.exp(1j * np.pi / M) * point
            assert ffhd_decode(GAIN * rotated, GAIN, M, 1e-3) == SymbolPair(1, j)

    def test_dispatch_through_decode_many(self, params, crossover):
        r = complex_normal(RngStream(16), 1.0, 300)
        direct = ffhd_decode_many(r, GAIN, params.psk_order, params.noise_power)
        dispatched = decode_many(DecoderKind.FFHD, r, GAIN, params, crossover)
        np.testing.assert_array_equal(direct[0], dispatched[0])
        np.testing.assert_array_equal(direct[1], dispatched[1])
