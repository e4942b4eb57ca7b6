from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from bobdec import DecoderKind


class SolveMethod(str, Enum):
    NEWTON = "newton"
    BISECTION_FALLBACK = "bisectionFallback"
    BISECTION = "bisection"


class AlphaSolveError(RuntimeError):
    """Base class for power-split solver failures."""


class RegimeError(AlphaSolveError):
    """f_gap has no sign change on the bracket: the SNR is too low for a unique crossing."""

    def __init__(self, message: str, f_low: float, f_high: float):
        super().__init__(f"{message} (f(low)={f_low:.6g}, f(high)={f_high:.6g})")
        self.f_low = f_low
        self.f_high = f_high


class ConvergenceError(AlphaSolveError):
    """Iteration budget exhausted before the residual tolerance was met."""


class AlphaSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha_star: float = Field(gt=0.0, lt=1.0)
    iterations: int = Field(ge=0)
    residual: float
    # how the returned iterate was produced
    method: SolveMethod
    fallback_steps: int = Field(default=0, ge=0)

    # solver settings, echoed into run metadata
    initial_point: float = 0.5
    bracket: tuple[float, float] = (1e-4, 1.0 - 1e-4)
    tolerance: float = 1e-9
    derivative_step: float = 1e-6


class AlphaSearch(BaseModel):
    """Exhaustive Monte-Carlo search of the SER-minimizing power split"""

    model_config = ConfigDict(frozen=True)

    decoder: DecoderKind
    trials: int
    seed: int
    alphas: list[float]
    ser: list[float]
    stderr: list[float]
    alpha_e: float
    ser_at_alpha_e: float
