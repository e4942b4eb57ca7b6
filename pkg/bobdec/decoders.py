"""
Joint decoders at Bob.

Each decoder scores the 2M hypotheses (i, j) with a log-domain metric and takes
the argmax. Columns are ordered (0,0) .. (0,M-1), (1,0) .. (1,M-1) so that
np.argmax breaks ties toward the smallest (i, then j).
"""

import numpy as np

from charlie import CrossoverProbs
from sigcore import SymbolPair, SystemParams, psk_points, rotated_points, rotation

from .schema import DecoderKind, NoiseVariances


def _log_gaussian(r: np.ndarray, centers: np.ndarray, variance: float) -> np.ndarray:
    """log of the circular complex Gaussian density (1/(pi N)) e^{-|r - c|^2/N}"""
    return -np.log(np.pi * variance) - np.abs(r - centers) ** 2 / variance


def _columns(r_b, h_cb) -> tuple[np.ndarray, np.ndarray]:
    r = np.atleast_1d(np.asarray(r_b, dtype=np.complex128))[:, None]
    h = np.broadcast_to(np.asarray(h_cb, dtype=np.complex128), r.shape[:1])[:, None]
    return r, h


def log_metrics(
    kind: DecoderKind,
    r_b,
    h_cb,
    params: SystemParams,
    crossover: CrossoverProbs,
) -> np.ndarray:
    """(n, 2M) matrix of log-domain hypothesis metrics for JMAP, JMAX or JD."""
    r, h = _columns(r_b, h_cb)
    noise = NoiseVariances.from_params(params)
    y = h * psk_points(params.psk_order)
    y_rot = h * rotated_points(params.psk_order, params.alpha)

    with np.errstate(divide="ignore"):
        log_p = np.log(crossover.matrix)

    if kind == DecoderKind.JD:
        m0 = log_p[0, 0] + _log_gaussian(r, y, noise.nb0)
        m1 = log_p[1, 1] + _log_gaussian(r, y_rot, noise.nb1)
        return np.hstack([m0, m1])

    c00 = log_p[0, 0] + _log_gaussian(r, y, noise.nb0)
    c01 = log_p[0, 1] + _log_gaussian(r, y_rot, noise.nb0)
    c10 = log_p[1, 0] + _log_gaussian(r, y, noise.nb1)
    c11 = log_p[1, 1] + _log_gaussian(r, y_rot, noise.nb1)

    with np.errstate(invalid="ignore"):
        if kind == DecoderKind.JMAP:
            return np.hstack([np.logaddexp(c00, c01), np.logaddexp(c10, c11)])
        if kind == DecoderKind.JMAX:
            return np.hstack([np.maximum(c00, c01), np.maximum(c10, c11)])
    raise ValueError(f"{kind} is not a full-duplex joint decoder")


def ffhd_log_metrics(r_b, h_cb, M: int, noise_power: float) -> np.ndarray:
    """Half-duplex baseline: S_C and e^{i pi/M} S_C at unit power, common variance N_o"""
    r, h = _columns(r_b, h_cb)
    points = psk_points(M)
    constellation = np.concatenate([points, rotation(M) * points])
    return _log_gaussian(r, h * constellation, noise_power)


def _split(best: np.ndarray, M: int) -> tuple[np.ndarray, np.ndarray]:
    alice, charlie = np.divmod(best, M)
    return alice.astype(np.int8), charlie.astype(np.int64)


def decode_many(
    kind: DecoderKind,
    r_b,
    h_cb,
    params: SystemParams,
    crossover: CrossoverProbs,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized decode: returns (i_hat, j_hat) arrays."""
    if kind == DecoderKind.FFHD:
        return ffhd_decode_many(r_b, h_cb, params.psk_order, params.noise_power)
    metrics = log_metrics(kind, r_b, h_cb, params, crossover)
    return _split(np.argmax(metrics, axis=1), params.psk_order)


def ffhd_decode_many(r_b, h_cb, M: int, noise_power: float) -> tuple[np.ndarray, np.ndarray]:
    metrics = ffhd_log_metrics(r_b, h_cb, M, noise_power)
    return _split(np.argmax(metrics, axis=1), M)


def _single(alice: np.ndarray, charlie: np.ndarray) -> SymbolPair:
    return SymbolPair(int(alice[0]), int(charlie[0]))


def jmap_decode(r_b: complex, h_cb: complex, params: SystemParams, crossover: CrossoverProbs) -> SymbolPair:
    return _single(*decode_many(DecoderKind.JMAP, r_b, h_cb, params, crossover))


def jmax_decode(r_b: complex, h_cb: complex, params: SystemParams, crossover: CrossoverProbs) -> SymbolPair:
    return _single(*decode_many(DecoderKind.JMAX, r_b, h_cb, params, crossover))


def jd_decode(r_b: complex, h_cb: complex, params: SystemParams, crossover: CrossoverProbs) -> SymbolPair:
    return _single(*decode_many(DecoderKind.JD, r_b, h_cb, params, crossover))


def ffhd_decode(r_b: complex, h_cb: complex, M: int, noise_power: float) -> SymbolPair:
    return _single(*ffhd_decode_many(r_b, h_cb, M, noise_power))


def mixture_density(
    r_b: complex,
    h_cb: complex,
    hypothesis: SymbolPair,
    params: SystemParams,
    crossover: CrossoverProbs,
) -> float:
    """
    Linear-domain density g(r_B | x=i, y_j, h_CB): the two-component Gaussian
    mixture weighted by Charlie's crossover probabilities.
    """
    i, j = hypothesis
    M = params.psk_order
    if i not in (0, 1) or not 0 <= j < M:
        raise ValueError(f"invalid hypothesis {hypothesis} for M={M}")
    noise = NoiseVariances.from_params(params)
    y = psk_points(M)[j]
    y_rot = rotated_points(M, params.alpha)[j]

    def density(center: complex, variance: float) -> float:
        return float(np.exp(-abs(r_b - h_cb * center) ** 2 / variance) / (np.pi * variance))

    if i == 0:
        return crossover.p00 * density(y, noise.nb0) + crossover.p01 * density(y_rot, noise.nb0)
    return crossover.p10 * density(y, noise.nb1) + crossover.p11 * density(y_rot, noise.nb1)
