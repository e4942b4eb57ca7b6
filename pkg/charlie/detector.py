"""
Charlie's non-coherent energy detector for Alice's OOK bit.

Charlie sees r_C = sqrt(1-alpha) h_AC x + n_C without knowing h_AC, so r_C is
CN(0, N_C0) for x=0 and CN(0, N_C1) for x=1. The likelihood-ratio test reduces
to comparing |r_C|^2 with a threshold beta.
"""

import logging
import math

import numpy as np

from sigcore import SystemParams

from .schema import CrossoverProbs

logger = logging.getLogger(__name__)

# below this relative gap N_C1 and N_C0 are treated as equal
LIMIT_TOLERANCE = 1e-9


def charlie_noise_variances(params: SystemParams) -> tuple[float, float]:
    """(N_C0, N_C1) = (N_o, sigma_AC^2 (1-alpha) + N_o)"""
    n_c0 = params.noise_power
    n_c1 = params.sigma_ac2 * (1.0 - params.alpha) + params.noise_power
    return n_c0, n_c1


def threshold_from_variances(n_c0: float, n_c1: float) -> float:
    """beta = N_C0 N_C1 / (N_C1 - N_C0) * ln(N_C1 / N_C0), limit N_C0 as N_C1 -> N_C0"""
    if n_c0 <= 0.0 or n_c1 < n_c0:
        raise ValueError(f"need 0 < N_C0 <= N_C1, got ({n_c0}, {n_c1})")
    if n_c1 - n_c0 < LIMIT_TOLERANCE * n_c0:
        return n_c0
    delta = (n_c1 - n_c0) / n_c0
    return n_c1 * math.log1p(delta) / delta


def detector_threshold(params: SystemParams) -> float:
    return threshold_from_variances(*charlie_noise_variances(params))


def energy_detect(r_c: complex, params: SystemParams) -> int:
    """1 iff |r_C|^2 > beta; a tie decides 0"""
    return int(abs(r_c) ** 2 > detector_threshold(params))


def energy_detect_many(r_c: np.ndarray, threshold: float) -> np.ndarray:
    return (np.abs(r_c) ** 2 > threshold).astype(np.int8)


def crossover_at_threshold(beta: float, n_c0: float, n_c1: float) -> CrossoverProbs:
    """
    Confusion matrix of the test |r|^2 > beta when r is CN(0, n_c0) under x=0 and
    CN(0, n_c1) under x=1. beta need not be matched to the variances.
    """
    ratio0 = beta / n_c0
    ratio1 = beta / n_c1
    return CrossoverProbs(
        p00=-math.expm1(-ratio0),
        p01=math.exp(-ratio0),
        p10=-math.expm1(-ratio1),
        p11=math.exp(-ratio1),
        n_c0=n_c0,
        n_c1=n_c1,
        beta=beta,
    )


def crossover_from_variances(n_c0: float, n_c1: float) -> CrossoverProbs:
    return crossover_at_threshold(threshold_from_variances(n_c0, n_c1), n_c0, n_c1)


def crossover_probs(params: SystemParams) -> CrossoverProbs:
    """P01 = e^{-beta/N_C0}, P10 = 1 - e^{-beta/N_C1}; every consumer reads Charlie's errors from here"""
    n_c0, n_c1 = charlie_noise_variances(params)
    probs = crossover_from_variances(n_c0, n_c1)
    logger.debug(
        "crossover alpha=%.6g N_o=%.3g beta=%.6g p01=%.4g p10=%.4g",
        params.alpha,
        params.noise_power,
        probs.beta,
        probs.p01,
        probs.p10,
    )
    return probs
