from .schema import AvgBounds, PairwiseEvents, PairwiseTerms
from .special import gaussian_q, marcum_q1
from .quadrature import QuadratureError, expect_rayleigh
from .bounds import (
    avg_bounds,
    closed_form_averages,
    conditional_bound,
    constellation_geometry,
    dominant_terms,
    pairwise_events,
    pairwise_terms,
)

__all__ = [
    "AvgBounds",
    "PairwiseEvents",
    "PairwiseTerms",
    "QuadratureError",
    "avg_bounds",
    "closed_form_averages",
    "conditional_bound",
    "constellation_geometry",
    "dominant_terms",
    "expect_rayleigh",
    "gaussian_q",
    "marcum_q1",
    "pairwise_events",
    "pairwise_terms",
]
