import logging
import math
from typing import Callable

import numpy as np
from scipy import integrate

logger = logging.getLogger(__name__)

# e^{-U} = 1e-12, so the neglected tail is below 1e-12 for |f| <= 1
TAIL_MASS = 1e-12
UPPER_LIMIT = -math.log(TAIL_MASS)
MAX_SUBINTERVALS = 200


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested accuracy."""

    def __init__(self, message: str, evaluations: int, subintervals: int, abserr: float):
        super().__init__(
            f"{message} (evaluations={evaluations}, subintervals={subintervals}, abserr={abserr:.3g})"
        )
        self.evaluations = evaluations
        self.subintervals = subintervals
        self.abserr = abserr


def expect_rayleigh(f: Callable[[float], float], tolerance: float = 1e-8) -> float:
    """
    E[f(|h|^2)] for h ~ CN(0,1), i.e. the integral of f(u) e^{-u} over u >= 0.

    Integrated adaptively on [0, U] with the exponential tail beyond U dropped.
    """
    result = integrate.quad(
        lambda u: f(u) * np.exp(-u),
        0.0,
        UPPER_LIMIT,
        epsabs=tolerance,
        epsrel=1e-10,
        limit=MAX_SUBINTERVALS,
        full_output=1,
    )
    value, abserr, info = result[0], result[1], result[2]
    if len(result) >= 4:
        raise QuadratureError(str(result[3]).strip(), info["neval"], info["last"], abserr)
    if abserr > tolerance:
        raise QuadratureError("error estimate above tolerance", info["neval"], info["last"], abserr)
    logger.debug("expect_rayleigh value=%.12g abserr=%.3g neval=%d", value, abserr, info["neval"])
    return float(value)
