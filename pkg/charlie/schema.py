from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

SUM_TOLERANCE = 1e-12


class CrossoverProbs(BaseModel):
    """Charlie's detector confusion matrix, p_xy = Pr(decide y | Alice sent x)"""

    model_config = ConfigDict(frozen=True)

    p00: float = Field(ge=0.0, le=1.0)
    p01: float = Field(ge=0.0, le=1.0)
    p10: float = Field(ge=0.0, le=1.0)
    p11: float = Field(ge=0.0, le=1.0)

    # detector intermediates, absent for synthetic matrices
    n_c0: Optional[float] = None
    n_c1: Optional[float] = None
    beta: Optional[float] = None

    @model_validator(mode="after")
    def _rows_sum_to_one(self) -> "CrossoverProbs":
        if abs(self.p00 + self.p01 - 1.0) > SUM_TOLERANCE:
            raise ValueError("p00 + p01 must equal 1")
        if abs(self.p10 + self.p11 - 1.0) > SUM_TOLERANCE:
            raise ValueError("p10 + p11 must equal 1")
        return self

    @classmethod
    def identity(cls) -> "CrossoverProbs":
        """Error-free detector"""
        return cls(p00=1.0, p01=0.0, p10=0.0, p11=1.0)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.p00, self.p01], [self.p10, self.p11]])
