from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from sigcore import SystemParams


class DecoderKind(str, Enum):
    JMAP = "JMAP"
    JMAX = "JMAX"
    JD = "JD"
    FFHD = "FFHD"

    @classmethod
    def parse(cls, name: str) -> "DecoderKind":
        try:
            return cls(name.strip().upper())
        except ValueError:
            valid = ", ".join(kind.value for kind in cls)
            raise ValueError(f"unknown decoder {name!r}, expected one of {valid}") from None


class NoiseVariances(BaseModel):
    """Effective noise at Bob: N_B0 when Alice is silent, N_B1 when h_AB sqrt(1-alpha) adds in"""

    model_config = ConfigDict(frozen=True)

    nb0: float
    nb1: float

    @model_validator(mode="after")
    def _ordered(self) -> "NoiseVariances":
        if not 0.0 < self.nb0 < self.nb1:
            raise ValueError(f"need 0 < nb0 < nb1, got ({self.nb0}, {self.nb1})")
        return self

    @classmethod
    def from_params(cls, params: SystemParams) -> "NoiseVariances":
        return cls(
            nb0=params.noise_power,
            nb1=params.noise_power + (1.0 - params.alpha),
        )
