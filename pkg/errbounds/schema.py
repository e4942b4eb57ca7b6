from typing import Annotated, NamedTuple

from pydantic import BaseModel, ConfigDict, Field

Probability = Annotated[float, Field(ge=0.0, le=1.0)]


class PairwiseTerms(BaseModel):
    """Conditional pairwise error terms at a fixed gamma = |h_CB|, with their intermediates"""

    model_config = ConfigDict(frozen=True)

    p1: Probability
    p1c: Probability
    p2: Probability
    p2c: Probability
    p3: Probability
    p3c: float = 0.5

    d: float = Field(ge=0.0)
    ell: float = Field(ge=0.0)
    a_mag: float = Field(ge=0.0)
    b_mag: float = Field(ge=0.0)
    xi: float
    sigma_b0: float = Field(gt=0.0)
    sigma_b1: float = Field(gt=0.0)
    xi_clamped: bool = False


class PairwiseEvents(NamedTuple):
    """The three dominant pairwise error probabilities kept by the high-SNR union bound"""

    zero_to_one: float  # (0, j) -> (1, j)
    one_to_zero: float  # (1, j) -> (0, j)
    one_to_neighbour: float  # (1, j) -> (1, j+1)


class AvgBounds(BaseModel):
    """Channel-averaged bounds at one (alpha, M, N_o, sigma_AC^2) point"""

    model_config = ConfigDict(frozen=True)

    p1avg: float = Field(ge=0.0)
    p3avg: Probability
    p2cavg_lb: Probability
    e2: float
    e2c: float
    union_bound: float = Field(ge=0.0)
    p_dom: float = Field(ge=0.0)
    dominant_upper: float = Field(ge=0.0)
    f1: float
    f2: float
    xi_clamped: bool = False
