"""
Experiment configuration.

Values are layered: SCFFFD_* environment defaults, then a flat key=value
config file, then command-line flags.
"""

import math
import os
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from dotenv import dotenv_values, load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from bobdec import DecoderKind
from sigcore.schema import is_power_of_two

load_dotenv()

DEFAULT_SEED = int(os.getenv("SCFFFD_SEED", "20240601"))
DEFAULT_TRIALS = int(os.getenv("SCFFFD_TRIALS", "1000000"))
DEFAULT_WORKERS = int(os.getenv("SCFFFD_WORKERS", "1"))
DEFAULT_OUTPUT_DIR = os.getenv("SCFFFD_OUTPUT_DIR", "results")

MIN_TRIALS = 1_000
LIST_FIELDS = ("snr_db", "psk_orders", "interference", "decoders")

# config-file and flag spellings that differ from field names
ALIASES = {
    "psk_order": "psk_orders",
    "m": "psk_orders",
    "decoder": "decoders",
    "interference_power": "interference",
    "snr": "snr_db",
    "output": "out",
    "experiment": "kind",
}


class ConfigError(ValueError):
    """The experiment configuration could not be parsed or is out of range."""


class ExperimentKind(str, Enum):
    SER_VS_ALPHA = "serVsAlpha"
    ALPHA_STAR = "alphaStar"
    SER_VS_SNR = "serVsSnr"
    TRADEOFF = "tradeoff"
    POWER_AUDIT = "powerAudit"
    FFHD_COMPARE = "ffhdCompare"
    BOUND_CURVE = "boundCurve"


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ExperimentKind
    alpha_start: float = Field(default=0.01, gt=0.0, lt=1.0)
    alpha_stop: float = Field(default=0.99, gt=0.0, lt=1.0)
    alpha_step: float = Field(default=0.01, gt=0.0)
    snr_db: list[float] = Field(default_factory=lambda: [35.0], min_length=1)
    psk_orders: list[int] = Field(default_factory=lambda: [4], min_length=1)
    sigma_ac2: float = Field(default=4.0, ge=1.0)
    interference: list[float] = Field(default_factory=lambda: [0.0, 1.0], min_length=1)
    decoders: list[DecoderKind] = Field(
        default_factory=lambda: [DecoderKind.JMAP, DecoderKind.JMAX, DecoderKind.JD],
        min_length=1,
    )
    trials: int = Field(default=DEFAULT_TRIALS, ge=MIN_TRIALS)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    workers: int = Field(default=DEFAULT_WORKERS, ge=1)
    out: Optional[Path] = None
    genie: bool = False
    alpha_e: bool = False
    jammer_power: float = Field(default=100.0, ge=0.0)

    @field_validator(*LIST_FIELDS, mode="before")
    @classmethod
    def _split_lists(cls, value: Any) -> Any:
        if isinstance(value, str):
            return [item.strip() for item in value.split(",") if item.strip()]
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("decoders", mode="before")
    @classmethod
    def _parse_decoders(cls, value: Any) -> Any:
        if isinstance(value, str):
            value = [item.strip() for item in value.split(",") if item.strip()]
        if isinstance(value, list):
            return [DecoderKind.parse(v) if isinstance(v, str) else v for v in value]
        return value

    @field_validator("psk_orders")
    @classmethod
    def _powers_of_two(cls, value: list[int]) -> list[int]:
        for order in value:
            if not is_power_of_two(order):
                raise ValueError(f"PSK order must be a power of two >= 2, got {order}")
        return value

    @field_validator("interference")
    @classmethod
    def _non_negative(cls, value: list[float]) -> list[float]:
        if any(v < 0.0 for v in value):
            raise ValueError("interference power must be >= 0")
        return value

    @field_validator("snr_db")
    @classmethod
    def _finite_snr(cls, value: list[float]) -> list[float]:
        if not all(math.isfinite(v) for v in value):
            raise ValueError("SNR values must be finite")
        return value

    @model_validator(mode="after")
    def _alpha_grid(self) -> "ExperimentConfig":
        if self.alpha_stop < self.alpha_start:
            raise ValueError("alpha_stop must not be below alpha_start")
        if self.alpha_e and self.trials < 100_000:
            raise ValueError("the alpha_E search needs trials >= 100000")
        return self

    @property
    def alphas(self) -> list[float]:
        """alpha_start, alpha_start + step, ... up to alpha_stop inclusive"""
        count = int(math.floor((self.alpha_stop - self.alpha_start) / self.alpha_step + 1e-9)) + 1
        return [round(self.alpha_start + k * self.alpha_step, 12) for k in range(count)]

    def output_path(self) -> Path:
        if self.out is not None:
            return self.out
        return Path(DEFAULT_OUTPUT_DIR) / f"{self.kind.value}.csv"

    def echo(self) -> dict[str, Any]:
        """JSON-ready copy for run metadata"""
        return self.model_dump(mode="json")


def _normalize_key(key: str) -> str:
    key = key.strip().lower().replace("-", "_")
    return ALIASES.get(key, key)


def load_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat key=value file (dotenv syntax, # comments allowed)."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    values = dotenv_values(path)
    parsed = {}
    for key, value in values.items():
        if value is None:
            raise ConfigError(f"config key {key!r} has no value")
        parsed[_normalize_key(key)] = value
    return parsed


def build_config(
    file_values: Optional[dict[str, Any]] = None,
    flag_values: Optional[dict[str, Any]] = None,
) -> ExperimentConfig:
    """Merge file values and flags (flags win) into a validated config."""
    merged: dict[str, Any] = {}
    for source in (file_values or {}, flag_values or {}):
        for key, value in source.items():
            if value is not None:
                merged[_normalize_key(key)] = value
    unknown = set(merged) - set(ExperimentConfig.model_fields)
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
    try:
        return ExperimentConfig(**merged)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc
