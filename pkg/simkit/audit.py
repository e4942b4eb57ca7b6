import logging
from functools import partial

from sigcore import SystemParams

from .engine import _scfffd_block, run_blocks
from .schema import PowerAudit

logger = logging.getLogger(__name__)


def power_audit(
    params: SystemParams,
    trials: int,
    genie: bool,
    seed: int,
    workers: int = 1,
    stream_key: tuple[int, ...] = (),
) -> PowerAudit:
    """
    Average power an observer measures on f_CB and f_AB, split by Alice's bit.
    In genie mode Charlie forwards Alice's true bit and the bands read exactly
    1.0 on f_CB and 1.0 / 0.0 on f_AB.
    """
    block_fn = partial(
        _scfffd_block,
        params=params,
        decoder=None,
        genie=genie,
        seed=seed,
        stream_key=tuple(stream_key),
    )
    audit = PowerAudit.from_tally(run_blocks(block_fn, trials, workers), genie)
    logger.info(
        "power audit alpha=%.4f genie=%s: f_CB %.6f/%.6f f_AB %.6f/%.6f (x=0/x=1)",
        params.alpha,
        genie,
        audit.fcb_given_x0.mean,
        audit.fcb_given_x1.mean,
        audit.fab_given_x0.mean,
        audit.fab_given_x1.mean,
    )
    return audit
