from .schema import MCEstimate, PowerAudit, SerReport, TradeoffRecord, TrialOutcome
from .engine import BLOCK_SIZE, run_ffhd, run_scfffd, simulate_ffhd_trials, simulate_trials
from .audit import power_audit
from .tradeoff import ook_reference_ser, psk_rayleigh_ser, run_tradeoff

__all__ = [
    "BLOCK_SIZE",
    "MCEstimate",
    "PowerAudit",
    "SerReport",
    "TradeoffRecord",
    "TrialOutcome",
    "ook_reference_ser",
    "power_audit",
    "psk_rayleigh_ser",
    "run_ffhd",
    "run_scfffd",
    "run_tradeoff",
    "simulate_ffhd_trials",
    "simulate_trials",
]
