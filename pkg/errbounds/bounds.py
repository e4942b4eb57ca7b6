"""
Analytical error bounds for the joint dominant decoder.

Conditional on gamma = |h_CB| the decoder error is bounded by three pairwise
events built from the terms P1, P1c, P2, P2c, P3, P3c. Averaging over the
Rayleigh channel gives closed forms for P1 and P3 and quadrature for P2 and P2c.
"""

import logging
import math

from bobdec import NoiseVariances
from charlie import CrossoverProbs
from sigcore import SystemParams

from .quadrature import expect_rayleigh
from .schema import AvgBounds, PairwiseEvents, PairwiseTerms
from .special import gaussian_q, marcum_q1

logger = logging.getLogger(__name__)


def constellation_geometry(M: int, alpha: float) -> tuple[float, float]:
    """
    d: distance between y and its rotated, scaled partner sqrt(alpha) e^{i pi/M} y
    ell: distance between neighbouring points of the rotated set
    """
    d = math.sqrt(max(0.0, 1.0 + alpha - 2.0 * math.sqrt(alpha) * math.cos(math.pi / M)))
    ell = 2.0 * math.sqrt(alpha) * math.sin(math.pi / M)
    return d, ell


def pairwise_terms(
    gamma: float, params: SystemParams, crossover: CrossoverProbs
) -> PairwiseTerms:
    if gamma < 0.0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    noise = NoiseVariances.from_params(params)
    nb0, nb1 = noise.nb0, noise.nb1
    gap = nb0 - nb1
    d, ell = constellation_geometry(params.psk_order, params.alpha)

    a_mag = abs(gamma * d * nb0 / gap)
    b_mag = abs(gamma * d * nb1 / gap)
    log_ratio = math.log(nb0 * crossover.p11 / (nb1 * crossover.p00))
    xi = nb0 * nb1 / gap * (log_ratio + gamma * gamma * d * d / gap)

    clamped = xi < 0.0
    if clamped:
        logger.debug("xi=%.3g < 0 at gamma=%.4g alpha=%.6g, clamping", xi, gamma, params.alpha)
    root_xi = math.sqrt(xi) if not clamped else 0.0

    sigma_b0 = math.sqrt(nb0 / 2.0)
    sigma_b1 = math.sqrt(nb1 / 2.0)

    return PairwiseTerms(
        p1=marcum_q1(a_mag / sigma_b0, root_xi / sigma_b0),
        p1c=marcum_q1(b_mag / sigma_b0, root_xi / sigma_b0),
        p2=1.0 - marcum_q1(b_mag / sigma_b1, root_xi / sigma_b1),
        p2c=1.0 - marcum_q1(a_mag / sigma_b1, root_xi / sigma_b1),
        p3=gaussian_q(gamma * ell / math.sqrt(2.0 * nb1)),
        p3c=0.5,
        d=d,
        ell=ell,
        a_mag=a_mag,
        b_mag=b_mag,
        xi=xi,
        sigma_b0=sigma_b0,
        sigma_b1=sigma_b1,
        xi_clamped=clamped,
    )


def pairwise_events(
    gamma: float, params: SystemParams, crossover: CrossoverProbs
) -> PairwiseEvents:
    t = pairwise_terms(gamma, params, crossover)
    return PairwiseEvents(
        zero_to_one=crossover.p00 * t.p1 + crossover.p01 * t.p1c,
        one_to_zero=crossover.p11 * t.p2 + crossover.p10 * t.p2c,
        one_to_neighbour=crossover.p11 * t.p3 + crossover.p10 * t.p3c,
    )


def conditional_bound(
    gamma: float,
    params: SystemParams,
    crossover: CrossoverProbs,
    simplified: bool = True,
) -> float:
    """
    Upper bound on Pr(error | |h_CB| = gamma).

    simplified=True replaces P00 P1 + P01 P1c by P1 (P01 is negligible at high SNR).
    """
    if not simplified:
        return sum(pairwise_events(gamma, params, crossover))
    t = pairwise_terms(gamma, params, crossover)
    return (
        t.p1
        + crossover.p11 * t.p2
        + crossover.p10 * t.p2c
        + crossover.p11 * t.p3
        + crossover.p10 * t.p3c
    )


def closed_form_averages(
    params: SystemParams, crossover: CrossoverProbs
) -> tuple[float, float, float]:
    """(P1avg, P3avg, lower bound on E[P2c]), all closed form"""
    noise = NoiseVariances.from_params(params)
    nb0, nb1 = noise.nb0, noise.nb1
    d, ell = constellation_geometry(params.psk_order, params.alpha)
    split = 1.0 - params.alpha

    exponent = nb1 / (nb1 - nb0)
    log_ratio = math.log(nb0 * crossover.p11 / (nb1 * crossover.p00))
    gap2 = (nb0 - nb1) ** 2
    p1avg = math.exp(exponent * log_ratio) * gap2 / (gap2 + d * d * nb1)

    p3avg = 2.0 * nb1 / (4.0 * nb1 + ell * ell)

    n_o = params.noise_power
    num = 4.0 * d * d * n_o * n_o
    p2cavg_lb = num / (num + (n_o + split) * split * split)
    return p1avg, p3avg, p2cavg_lb


def dominant_terms(params: SystemParams, crossover: CrossoverProbs) -> tuple[float, float]:
    """f1 = P11 P3avg and f2 = P10 (lower bound on E[P2c] + 1/2)"""
    _, p3avg, p2cavg_lb = closed_form_averages(params, crossover)
    return crossover.p11 * p3avg, crossover.p10 * (p2cavg_lb + 0.5)


def avg_bounds(
    params: SystemParams, crossover: CrossoverProbs, tolerance: float = 1e-8
) -> AvgBounds:
    """Channel-averaged union bound and dominant term; E[P2], E[P2c] by quadrature"""
    p1avg, p3avg, p2cavg_lb = closed_form_averages(params, crossover)
    clamps = 0

    def term(u: float, name: str) -> float:
        nonlocal clamps
        t = pairwise_terms(math.sqrt(u), params, crossover)
        clamps += t.xi_clamped
        return getattr(t, name)

    e2 = expect_rayleigh(lambda u: term(u, "p2"), tolerance)
    e2c = expect_rayleigh(lambda u: term(u, "p2c"), tolerance)
    if clamps:
        logger.warning(
            "xi clamped to 0 at %d quadrature nodes (alpha=%.6g, N_o=%.3g)",
            clamps,
            params.alpha,
            params.noise_power,
        )

    p11, p10 = crossover.p11, crossover.p10
    union = p1avg + p11 * e2 + p10 * e2c + p11 * p3avg + p10 * 0.5
    p_dom = p11 * (p3avg + e2) + p10 * (e2c + 0.5)
    return AvgBounds(
        p1avg=p1avg,
        p3avg=p3avg,
        p2cavg_lb=p2cavg_lb,
        e2=e2,
        e2c=e2c,
        union_bound=union,
        p_dom=p_dom,
        dominant_upper=2.0 * p_dom,
        f1=p11 * p3avg,
        f2=p10 * (p2cavg_lb + 0.5),
        xi_clamped=clamps > 0,
    )
