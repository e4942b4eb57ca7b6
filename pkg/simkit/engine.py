"""
Monte-Carlo engine.

Trials run in fixed blocks of BLOCK_SIZE symbols; block b draws from the stream
(seed, *stream_key, b) and the per-block tallies are summed in block order.
Results are therefore identical for any worker count.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial, reduce
from operator import add
from typing import Callable, Optional

import numpy as np

from bobdec import DecoderKind, decode_many, ffhd_decode_many
from charlie import crossover_from_variances, crossover_probs, energy_detect_many
from sigcore import (
    RngStream,
    SystemParams,
    charlie_tx_points,
    complex_normal,
    draw_channels,
    psk_points,
    rotation,
)

from .schema import BlockTally, SerReport, TrialOutcome

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16


def simulate_trials(
    params: SystemParams,
    rng: RngStream,
    size: int,
    decoder: Optional[DecoderKind] = None,
    genie: bool = False,
    h_cb: Optional[complex] = None,
) -> TrialOutcome:
    """
    One block of SC-FFFD symbols.

    Charlie forwards with his actually detected bit unless `genie` is set, in
    which case he forwards Alice's true bit. A fixed `h_cb` replaces the drawn
    Charlie->Bob gain (conditional checks); the random draws are unchanged.
    """
    M = params.psk_order
    alpha = params.alpha
    split = 1.0 - alpha

    x = rng.integers(0, 2, size)
    j = rng.integers(0, M, size)
    channel = draw_channels(params, rng, size)
    n_c = complex_normal(rng, params.noise_power, size)
    n_b = complex_normal(rng, params.noise_power, size)
    gain_cb = channel.h_cb if h_cb is None else np.full(size, h_cb, dtype=np.complex128)

    crossover = crossover_probs(params)
    r_c = math.sqrt(split) * channel.h_ac * x + n_c
    detected = energy_detect_many(r_c, crossover.beta)
    forwarded = x.astype(np.int8) if genie else detected

    t = charlie_tx_points(M, j, forwarded, alpha)
    r_b = gain_cb * t + channel.h_ab * math.sqrt(split) * x + n_b

    # f_CB: Charlie's symbol (1 or alpha) plus Alice's 1-alpha when x=1
    # f_AB: Alice's residual alpha when x=1 plus Charlie's 1-alpha when he forwards a 1
    power_fcb = np.where(forwarded == 1, alpha, 1.0) + split * x
    power_fab = alpha * x + split * forwarded

    outcome = TrialOutcome(
        sent_bit=x.astype(np.int8),
        sent_index=j,
        detected=detected,
        forwarded=forwarded,
        power_fab=power_fab,
        power_fcb=power_fcb,
        received=r_b,
        gain_cb=gain_cb,
    )
    if decoder is not None:
        outcome.decoded_bit, outcome.decoded_index = decode_many(
            decoder, r_b, gain_cb, params, crossover
        )
    return outcome


def simulate_ffhd_trials(
    M: int,
    noise_power: float,
    sigma_ac2: float,
    interference_power: float,
    rng: RngStream,
    size: int,
) -> TrialOutcome:
    """
    One block of the half-duplex baseline. Charlie listens to Alice on f_AB at
    full power with CN(0, J) jammer leakage, then sends y or e^{i pi/M} y at unit
    power on f_CB. Alice's signal does not reach Bob on f_CB.
    """
    x = rng.integers(0, 2, size)
    j = rng.integers(0, M, size)
    h_ac = complex_normal(rng, sigma_ac2, size)
    h_cb = complex_normal(rng, 1.0, size)
    n_c = complex_normal(rng, noise_power, size)
    n_b = complex_normal(rng, noise_power, size)
    leakage = complex_normal(rng, 1.0, size)

    n_c0 = noise_power + interference_power
    crossover = crossover_from_variances(n_c0, sigma_ac2 + n_c0)
    r_c = h_ac * x + n_c + math.sqrt(interference_power) * leakage
    detected = energy_detect_many(r_c, crossover.beta)

    t = np.where(detected == 1, rotation(M), 1.0) * psk_points(M)[j]
    r_b = h_cb * t + n_b
    decoded_bit, decoded_index = ffhd_decode_many(r_b, h_cb, M, noise_power)
    ones = np.ones(size)
    return TrialOutcome(
        sent_bit=x.astype(np.int8),
        sent_index=j,
        detected=detected,
        forwarded=detected,
        power_fab=x * 1.0,
        power_fcb=ones,
        decoded_bit=decoded_bit,
        decoded_index=decoded_index,
        received=r_b,
        gain_cb=h_cb,
    )


def _block_sizes(trials: int) -> list[int]:
    blocks = -(-trials // BLOCK_SIZE)
    return [min(BLOCK_SIZE, trials - b * BLOCK_SIZE) for b in range(blocks)]


def _scfffd_block(
    task: tuple[int, int],
    params: SystemParams,
    decoder: Optional[DecoderKind],
    genie: bool,
    seed: int,
    stream_key: tuple[int, ...],
) -> BlockTally:
    block, size = task
    rng = RngStream(seed, *stream_key, block)
    return BlockTally.from_outcome(simulate_trials(params, rng, size, decoder, genie))


def _ffhd_block(
    task: tuple[int, int],
    M: int,
    noise_power: float,
    sigma_ac2: float,
    interference_power: float,
    seed: int,
    stream_key: tuple[int, ...],
) -> BlockTally:
    block, size = task
    rng = RngStream(seed, *stream_key, block)
    return BlockTally.from_outcome(
        simulate_ffhd_trials(M, noise_power, sigma_ac2, interference_power, rng, size)
    )


def run_blocks(block_fn: Callable[[tuple[int, int]], BlockTally], trials: int, workers: int = 1) -> BlockTally:
    """Evaluate every block and sum the tallies in block order."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    tasks = list(enumerate(_block_sizes(trials)))
    start = time.perf_counter()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            tallies = list(executor.map(block_fn, tasks))
    else:
        tallies = [block_fn(task) for task in tasks]
    logger.debug(
        "%d trials in %d blocks on %d worker(s), %.2fs",
        trials,
        len(tasks),
        workers,
        time.perf_counter() - start,
    )
    return reduce(add, tallies)


def run_scfffd(
    params: SystemParams,
    decoder: DecoderKind,
    trials: int,
    seed: int,
    workers: int = 1,
    genie: bool = False,
    stream_key: tuple[int, ...] = (),
) -> SerReport:
    """End-to-end SC-FFFD symbol error rates for one decoder at one operating point."""
    if decoder == DecoderKind.FFHD:
        raise ValueError("the FFHD decoder belongs to the half-duplex baseline, use run_ffhd")
    block_fn = partial(
        _scfffd_block,
        params=params,
        decoder=decoder,
        genie=genie,
        seed=seed,
        stream_key=tuple(stream_key),
    )
    report = SerReport.from_tally(run_blocks(block_fn, trials, workers))
    logger.info(
        "SC-FFFD %s alpha=%.4f snr=%.1fdB: joint SER %.3e +/- %.1e",
        decoder.value,
        params.alpha,
        params.snr_db,
        report.joint_ser.mean,
        report.joint_ser.stderr,
    )
    return report


def run_ffhd(
    M: int,
    noise_power: float,
    sigma_ac2: float,
    interference_power: float,
    trials: int,
    seed: int,
    workers: int = 1,
    stream_key: tuple[int, ...] = (),
) -> SerReport:
    if interference_power < 0.0:
        raise ValueError(f"interference power must be >= 0, got {interference_power}")
    block_fn = partial(
        _ffhd_block,
        M=M,
        noise_power=noise_power,
        sigma_ac2=sigma_ac2,
        interference_power=interference_power,
        seed=seed,
        stream_key=tuple(stream_key),
    )
    report = SerReport.from_tally(run_blocks(block_fn, trials, workers))
    logger.info(
        "FFHD J=%.3g N_o=%.3g: joint SER %.3e +/- %.1e",
        interference_power,
        noise_power,
        report.joint_ser.mean,
        report.joint_ser.stderr,
    )
    return report
