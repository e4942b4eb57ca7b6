import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

# re/im live in the builtin complex; arrays of samples are complex128
ComplexSample = complex


def is_power_of_two(value: int) -> bool:
    return value >= 2 and value & (value - 1) == 0


class SystemParams(BaseModel):
    """One operating point of the relay: power split, PSK order, noise and Alice->Charlie gain"""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0, lt=1.0)
    psk_order: int = Field(ge=2)
    noise_power: float = Field(gt=0.0)
    sigma_ac2: float = Field(default=4.0, ge=1.0)

    @field_validator("psk_order")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if not is_power_of_two(value):
            raise ValueError(f"psk_order must be a power of two, got {value}")
        return value

    @field_validator("noise_power", "sigma_ac2")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("must be finite")
        return value

    @classmethod
    def from_snr_db(
        cls, alpha: float, psk_order: int, snr_db: float, sigma_ac2: float = 4.0
    ) -> "SystemParams":
        """N_o = 10^(-snr_db/10)"""
        return cls(
            alpha=alpha,
            psk_order=psk_order,
            noise_power=10.0 ** (-snr_db / 10.0),
            sigma_ac2=sigma_ac2,
        )

    @property
    def snr_db(self) -> float:
        return -10.0 * math.log10(self.noise_power)

    def with_alpha(self, alpha: float) -> "SystemParams":
        return self.model_copy(update={"alpha": alpha})


@dataclass(frozen=True)
class ChannelRealization:
    """Fading gains for one symbol (or a block of symbols when the fields are arrays)"""

    h_ac: complex | np.ndarray
    h_cb: complex | np.ndarray
    h_ab: complex | np.ndarray


class SymbolPair(NamedTuple):
    alice_bit: int
    charlie_index: int
