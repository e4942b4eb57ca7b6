"""
Power-split solver.

alpha* is the crossing of f1 = P11 P3avg (decreasing in alpha) with
f2 = P10 (P2cavg_lb + 1/2) (increasing), i.e. the root of f_gap = f1 - f2.
"""

import logging
import math
from typing import Callable

from charlie import crossover_probs
from errbounds import avg_bounds, dominant_terms
from sigcore import SystemParams

from .schema import AlphaSolution, ConvergenceError, RegimeError, SolveMethod

logger = logging.getLogger(__name__)

INITIAL_POINT = 0.5
BRACKET = (1e-4, 1.0 - 1e-4)
TOLERANCE = 1e-9
DERIVATIVE_STEP = 1e-6
MAX_ITERATIONS = 100
BISECTION_STEPS = 60


def f_gap(alpha: float, M: int, noise_power: float, sigma_ac2: float) -> float:
    """P11 P3avg - P10 (P2cavg_lb + 0.5)"""
    params = SystemParams(alpha=alpha, psk_order=M, noise_power=noise_power, sigma_ac2=sigma_ac2)
    f1, f2 = dominant_terms(params, crossover_probs(params))
    return f1 - f2


def _check_bracket(func: Callable[[float], float], low: float, high: float) -> tuple[float, float]:
    f_low, f_high = func(low), func(high)
    if not (f_low > 0.0 > f_high):
        raise RegimeError("no sign change of the dominant-term gap on the bracket", f_low, f_high)
    return f_low, f_high


def _bisect(func: Callable[[float], float], low: float, high: float, steps: int) -> float:
    f_low, _ = _check_bracket(func, low, high)
    for _ in range(steps):
        mid = 0.5 * (low + high)
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_low > 0.0):
            low, f_low = mid, f_mid
        else:
            high = mid
    return 0.5 * (low + high)


def bisect_alpha_star(
    M: int, noise_power: float, sigma_ac2: float, steps: int = BISECTION_STEPS
) -> float:
    """Plain bisection on f_gap; reference for the Newton solver."""
    return _bisect(lambda a: f_gap(a, M, noise_power, sigma_ac2), *BRACKET, steps)


def solve_alpha_star(M: int, noise_power: float, sigma_ac2: float) -> AlphaSolution:
    """
    Newton-Raphson on f_gap from alpha = 0.5 with a central-difference slope.
    The sign-change bracket shrinks every iteration; a Newton step that leaves
    it (or a flat slope) is replaced by a bisection step.
    """
    def func(alpha: float) -> float:
        return f_gap(alpha, M, noise_power, sigma_ac2)

    low, high = BRACKET
    f_low, _ = _check_bracket(func, low, high)

    x = INITIAL_POINT
    method = SolveMethod.NEWTON
    fallbacks = 0
    for iteration in range(1, MAX_ITERATIONS + 1):
        fx = func(x)
        logger.debug("newton iter %d: alpha=%.12g f=%.3e bracket=(%.12g, %.12g)", iteration, x, fx, low, high)
        if abs(fx) <= TOLERANCE:
            return AlphaSolution(
                alpha_star=x,
                iterations=iteration,
                residual=fx,
                method=method,
                fallback_steps=fallbacks,
                initial_point=INITIAL_POINT,
                bracket=BRACKET,
                tolerance=TOLERANCE,
                derivative_step=DERIVATIVE_STEP,
            )
        if (fx > 0.0) == (f_low > 0.0):
            low, f_low = x, fx
        else:
            high = x

        h = DERIVATIVE_STEP
        slope = (func(x + h) - func(x - h)) / (2.0 * h)
        candidate = x - fx / slope if slope != 0.0 and math.isfinite(slope) else math.nan
        if low < candidate < high:
            method = SolveMethod.NEWTON
        else:
            candidate = 0.5 * (low + high)
            method = SolveMethod.BISECTION_FALLBACK
            fallbacks += 1
            logger.debug("newton step rejected at iter %d, bisecting", iteration)
        x = candidate

    raise ConvergenceError(
        f"alpha* not found within {MAX_ITERATIONS} iterations (M={M}, N_o={noise_power:.3g})"
    )


def solve_alpha_dagger(
    M: int,
    noise_power: float,
    sigma_ac2: float,
    tolerance: float = 1e-8,
    steps: int = 40,
) -> AlphaSolution:
    """
    Crossing of P11 (P3avg + E[P2]) with P10 (E[P2c] + 1/2), the expectations
    taken by quadrature. Bisection only: each evaluation costs two integrals.
    """

    def gap(alpha: float) -> float:
        params = SystemParams(alpha=alpha, psk_order=M, noise_power=noise_power, sigma_ac2=sigma_ac2)
        crossover = crossover_probs(params)
        bounds = avg_bounds(params, crossover, tolerance)
        return crossover.p11 * (bounds.p3avg + bounds.e2) - crossover.p10 * (bounds.e2c + 0.5)

    root = _bisect(gap, *BRACKET, steps)
    logger.info("alpha dagger=%.6f (M=%d, N_o=%.3g)", root, M, noise_power)
    return AlphaSolution(
        alpha_star=root,
        iterations=steps,
        residual=gap(root),
        method=SolveMethod.BISECTION,
        initial_point=0.5 * sum(BRACKET),
        bracket=BRACKET,
        tolerance=tolerance,
        derivative_step=0.0,
    )
