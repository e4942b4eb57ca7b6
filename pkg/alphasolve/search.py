import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np

from bobdec import DecoderKind
from sigcore import SystemParams

from .schema import AlphaSearch

logger = logging.getLogger(__name__)

MIN_TRIALS = 100_000


def _point_ser(
    point: tuple[int, float],
    M: int,
    noise_power: float,
    sigma_ac2: float,
    decoder: DecoderKind,
    trials: int,
    seed: int,
    stream_key: tuple[int, ...],
) -> tuple[float, float]:
    from simkit.engine import run_scfffd

    index, alpha = point
    params = SystemParams(alpha=alpha, psk_order=M, noise_power=noise_power, sigma_ac2=sigma_ac2)
    report = run_scfffd(params, decoder, trials, seed, stream_key=(*stream_key, index))
    return report.joint_ser.mean, report.joint_ser.stderr


def search_alpha_e(
    alphas,
    M: int,
    noise_power: float,
    sigma_ac2: float,
    decoder: DecoderKind,
    trials: int,
    seed: int,
    workers: int = 1,
    stream_key: tuple[int, ...] = (),
) -> AlphaSearch:
    """
    Grid alpha minimizing the Monte-Carlo joint SER of `decoder`.

    Grid point k draws from stream (seed, *stream_key, k), so the result does not
    depend on how points are spread over workers. Callers searching several
    operating points give each its own stream_key. Ties go to the smallest alpha.
    """
    if trials < MIN_TRIALS:
        raise ValueError(f"exhaustive search needs at least {MIN_TRIALS} trials per point, got {trials}")
    grid = [float(a) for a in alphas]
    if not grid:
        raise ValueError("alpha grid is empty")

    evaluate = partial(
        _point_ser,
        M=M,
        noise_power=noise_power,
        sigma_ac2=sigma_ac2,
        decoder=decoder,
        trials=trials,
        seed=seed,
        stream_key=tuple(stream_key),
    )
    points = list(enumerate(grid))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(evaluate, points))
    else:
        results = [evaluate(point) for point in points]

    ser = [mean for mean, _ in results]
    stderr = [err for _, err in results]
    best = int(np.argmin(ser))
    logger.info(
        "alpha_E=%.4f for %s at N_o=%.3g (SER=%.3e over %d points)",
        grid[best],
        decoder.value,
        noise_power,
        ser[best],
        len(grid),
    )
    return AlphaSearch(
        decoder=decoder,
        trials=trials,
        seed=seed,
        alphas=grid,
        ser=ser,
        stderr=stderr,
        alpha_e=grid[best],
        ser_at_alpha_e=ser[best],
    )
