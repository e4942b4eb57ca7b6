"""Shared fixtures: operating points used across the suite."""

import pytest

from charlie import crossover_probs
from sigcore import RngStream, SystemParams

SEED = 20240601


@pytest.fixture
def rng() -> RngStream:
    return RngStream(SEED)


@pytest.fixture
def params_35db() -> SystemParams:
    """alpha = 0.5, QPSK, 35 dB"""
    return SystemParams.from_snr_db(alpha=0.5, psk_order=4, snr_db=35.0)


@pytest.fixture
def params_10db() -> SystemParams:
    """alpha = 0.5, QPSK, N_o = 0.1"""
    return SystemParams(alpha=0.5, psk_order=4, noise_power=0.1)


@pytest.fixture
def crossover_35db(params_35db):
    return crossover_probs(params_35db)
