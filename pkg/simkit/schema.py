import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class MCEstimate(BaseModel):
    """Monte-Carlo mean with its standard error"""

    model_config = ConfigDict(frozen=True)

    mean: float
    stderr: float = Field(ge=0.0)
    trials: int = Field(gt=0)

    @classmethod
    def from_counts(cls, events: int, trials: int) -> "MCEstimate":
        """Bernoulli rate: stderr = sqrt(p (1-p) / n)"""
        p = events / trials
        return cls(mean=p, stderr=math.sqrt(p * (1.0 - p) / trials), trials=trials)

    @classmethod
    def from_moments(cls, total: float, total_sq: float, trials: int) -> "MCEstimate":
        mean = total / trials
        variance = max(0.0, total_sq / trials - mean * mean)
        return cls(mean=mean, stderr=math.sqrt(variance / trials), trials=trials)

    def band(self, width: float = 3.0) -> tuple[float, float]:
        return self.mean - width * self.stderr, self.mean + width * self.stderr


@dataclass
class TrialOutcome:
    """Per-trial arrays for one block of simulated symbols."""

    sent_bit: np.ndarray
    sent_index: np.ndarray
    detected: np.ndarray
    forwarded: np.ndarray
    power_fab: np.ndarray
    power_fcb: np.ndarray
    decoded_bit: Optional[np.ndarray] = None
    decoded_index: Optional[np.ndarray] = None
    # r_B and the h_CB Bob decoded with
    received: Optional[np.ndarray] = None
    gain_cb: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self.sent_bit)


@dataclass
class BlockTally:
    """Additive per-block counters; blocks are reduced with +"""

    trials: int = 0
    joint_errors: int = 0
    alice_errors: int = 0
    charlie_errors: int = 0
    # rows: Alice's bit x, columns: Charlie's detected bit
    branches: np.ndarray = field(default_factory=lambda: np.zeros((2, 2), dtype=np.int64))
    # indexed by x
    fcb_sum: np.ndarray = field(default_factory=lambda: np.zeros(2))
    fcb_sq: np.ndarray = field(default_factory=lambda: np.zeros(2))
    fab_sum: np.ndarray = field(default_factory=lambda: np.zeros(2))
    fab_sq: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __add__(self, other: "BlockTally") -> "BlockTally":
        return BlockTally(
            trials=self.trials + other.trials,
            joint_errors=self.joint_errors + other.joint_errors,
            alice_errors=self.alice_errors + other.alice_errors,
            charlie_errors=self.charlie_errors + other.charlie_errors,
            branches=self.branches + other.branches,
            fcb_sum=self.fcb_sum + other.fcb_sum,
            fcb_sq=self.fcb_sq + other.fcb_sq,
            fab_sum=self.fab_sum + other.fab_sum,
            fab_sq=self.fab_sq + other.fab_sq,
        )

    @classmethod
    def from_outcome(cls, outcome: TrialOutcome) -> "BlockTally":
        x = outcome.sent_bit.astype(np.int64)
        tally = cls(trials=len(outcome))
        if outcome.decoded_bit is not None:
            alice_wrong = outcome.decoded_bit != outcome.sent_bit
            charlie_wrong = outcome.decoded_index != outcome.sent_index
            tally.alice_errors = int(np.count_nonzero(alice_wrong))
            tally.charlie_errors = int(np.count_nonzero(charlie_wrong))
            tally.joint_errors = int(np.count_nonzero(alice_wrong | charlie_wrong))
        np.add.at(tally.branches, (x, outcome.detected.astype(np.int64)), 1)
        for bit in (0, 1):
            mask = x == bit
            fcb = outcome.power_fcb[mask]
            fab = outcome.power_fab[mask]
            tally.fcb_sum[bit] = fcb.sum()
            tally.fcb_sq[bit] = (fcb * fcb).sum()
            tally.fab_sum[bit] = fab.sum()
            tally.fab_sq[bit] = (fab * fab).sum()
        return tally


class SerReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    joint_ser: MCEstimate
    alice_ser: MCEstimate
    charlie_ser: MCEstimate
    # Charlie's detector tallies: rows x, columns detected bit
    branch_counts: list[list[int]]

    @classmethod
    def from_tally(cls, tally: BlockTally) -> "SerReport":
        n = tally.trials
        return cls(
            joint_ser=MCEstimate.from_counts(tally.joint_errors, n),
            alice_ser=MCEstimate.from_counts(tally.alice_errors, n),
            charlie_ser=MCEstimate.from_counts(tally.charlie_errors, n),
            branch_counts=tally.branches.tolist(),
        )

    def empirical_crossover(self) -> tuple[MCEstimate, MCEstimate]:
        """Empirical (P01, P10) of Charlie's detector"""
        (n00, n01), (n10, n11) = self.branch_counts
        return MCEstimate.from_counts(n01, n00 + n01), MCEstimate.from_counts(n10, n10 + n11)


class PowerAudit(BaseModel):
    """Average transmitted power per band, conditioned on Alice's bit"""

    model_config = ConfigDict(frozen=True)

    genie: bool
    fcb_given_x0: MCEstimate
    fcb_given_x1: MCEstimate
    fab_given_x0: MCEstimate
    fab_given_x1: MCEstimate

    @classmethod
    def from_tally(cls, tally: BlockTally, genie: bool) -> "PowerAudit":
        counts = tally.branches.sum(axis=1)
        return cls(
            genie=genie,
            fcb_given_x0=MCEstimate.from_moments(tally.fcb_sum[0], tally.fcb_sq[0], int(counts[0])),
            fcb_given_x1=MCEstimate.from_moments(tally.fcb_sum[1], tally.fcb_sq[1], int(counts[1])),
            fab_given_x0=MCEstimate.from_moments(tally.fab_sum[0], tally.fab_sq[0], int(counts[0])),
            fab_given_x1=MCEstimate.from_moments(tally.fab_sum[1], tally.fab_sq[1], int(counts[1])),
        )


class TradeoffRecord(BaseModel):
    """Before/after comparison of Alice and Charlie at one SNR"""

    model_config = ConfigDict(frozen=True)

    snr_db: float
    psk_order: int
    alpha_star: float
    charlie_pre: MCEstimate
    charlie_pre_analytic: float
    alice_pre_unjammed: float
    alice_pre_jammed: float
    jammer_power: float
    alice_post: MCEstimate
    charlie_post: MCEstimate
    joint_post: MCEstimate
