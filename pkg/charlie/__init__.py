from .schema import CrossoverProbs
from .detector import (
    charlie_noise_variances,
    crossover_at_threshold,
    crossover_from_variances,
    crossover_probs,
    detector_threshold,
    energy_detect,
    energy_detect_many,
    threshold_from_variances,
)

__all__ = [
    "CrossoverProbs",
    "charlie_noise_variances",
    "crossover_at_threshold",
    "crossover_from_variances",
    "crossover_probs",
    "detector_threshold",
    "energy_detect",
    "energy_detect_many",
    "threshold_from_variances",
]
