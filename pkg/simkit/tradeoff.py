"""Before/after comparison: each node alone versus both under SC-FFFD at alpha*."""

import logging
import math
from functools import partial

import numpy as np
from scipy import integrate

from alphasolve import solve_alpha_star
from bobdec import DecoderKind
from charlie import crossover_at_threshold, threshold_from_variances
from sigcore import RngStream, SystemParams, complex_normal, psk_points

from .engine import run_blocks, run_scfffd
from .schema import BlockTally, SerReport, TradeoffRecord

logger = logging.getLogger(__name__)

DEFAULT_JAMMER_POWER = 100.0


def psk_rayleigh_ser(M: int, noise_power: float) -> float:
    """
    Coherent M-PSK symbol error rate over CN(0,1) fading with unit symbol energy:
    (1/pi) * integral over (0, (M-1)pi/M) of [1 + snr sin^2(pi/M)/sin^2(theta)]^-1
    """
    snr = 1.0 / noise_power
    g = math.sin(math.pi / M) ** 2
    value, _ = integrate.quad(
        lambda theta: 1.0 / (1.0 + snr * g / math.sin(theta) ** 2),
        0.0,
        (M - 1) * math.pi / M,
        epsabs=1e-12,
        limit=200,
    )
    return value / math.pi


def ook_reference_ser(noise_power: float, jammer_power: float = 0.0) -> float:
    """
    Alice alone on f_AB with unit-power OOK and energy detection at Bob tuned to
    (N_o, 1 + N_o). A jammer adds CN(0, jammer_power) the detector does not know about.
    """
    beta = threshold_from_variances(noise_power, 1.0 + noise_power)
    probs = crossover_at_threshold(beta, noise_power + jammer_power, 1.0 + noise_power + jammer_power)
    return 0.5 * (probs.p01 + probs.p10)


def _charlie_alone_block(
    task: tuple[int, int], M: int, noise_power: float, seed: int, stream_key: tuple[int, ...]
) -> BlockTally:
    block, size = task
    rng = RngStream(seed, *stream_key, block)
    points = psk_points(M)
    j = rng.integers(0, M, size)
    h = complex_normal(rng, 1.0, size)
    r = h * points[j] + complex_normal(rng, noise_power, size)
    decided = np.argmin(np.abs(r[:, None] - h[:, None] * points) ** 2, axis=1)
    errors = int(np.count_nonzero(decided != j))
    return BlockTally(trials=size, joint_errors=errors, charlie_errors=errors)


def run_tradeoff(
    M: int,
    noise_power: float,
    sigma_ac2: float,
    trials: int,
    seed: int,
    workers: int = 1,
    jammer_power: float = DEFAULT_JAMMER_POWER,
    alpha_star: float | None = None,
    stream_key: tuple[int, ...] = (),
) -> TradeoffRecord:
    """
    Charlie alone vs. Charlie and Alice under SC-FFFD at alpha*.

    alpha* is solved here unless the caller already has it.
    """
    if alpha_star is None:
        alpha_star = solve_alpha_star(M, noise_power, sigma_ac2).alpha_star
    params = SystemParams(
        alpha=alpha_star, psk_order=M, noise_power=noise_power, sigma_ac2=sigma_ac2
    )

    alone = run_blocks(
        partial(_charlie_alone_block, M=M, noise_power=noise_power, seed=seed, stream_key=(*stream_key, 0)),
        trials,
        workers,
    )
    charlie_pre = SerReport.from_tally(alone).charlie_ser
    post = run_scfffd(params, DecoderKind.JMAP, trials, seed, workers, stream_key=(*stream_key, 1))

    record = TradeoffRecord(
        snr_db=params.snr_db,
        psk_order=M,
        alpha_star=alpha_star,
        charlie_pre=charlie_pre,
        charlie_pre_analytic=psk_rayleigh_ser(M, noise_power),
        alice_pre_unjammed=ook_reference_ser(noise_power),
        alice_pre_jammed=ook_reference_ser(noise_power, jammer_power),
        jammer_power=jammer_power,
        alice_post=post.alice_ser,
        charlie_post=post.charlie_ser,
        joint_post=post.joint_ser,
    )
    logger.info(
        "tradeoff %.1fdB: Charlie %.3e -> %.3e, Alice (unjammed %.3e, jammed %.3f) -> %.3e",
        record.snr_db,
        charlie_pre.mean,
        record.charlie_post.mean,
        record.alice_pre_unjammed,
        record.alice_pre_jammed,
        record.alice_post.mean,
    )
    return record
