"""
Row builders, one per experiment kind.

Every row carries its full parameter point so CSV files from different runs
concatenate safely. Column order is fixed per kind.
"""

import logging
import math
from typing import Any, Callable

from alphasolve import (
    AlphaSolution,
    RegimeError,
    bisect_alpha_star,
    search_alpha_e,
    solve_alpha_dagger,
    solve_alpha_star,
)
from bobdec import DecoderKind
from charlie import crossover_probs
from errbounds import avg_bounds
from sigcore import SystemParams
from simkit import power_audit, run_ffhd, run_scfffd, run_tradeoff

from .config import ExperimentConfig, ExperimentKind

logger = logging.getLogger(__name__)

Row = dict[str, Any]
Solutions = dict[tuple[float, int], AlphaSolution]

POINT_COLUMNS = ["experiment", "snr_db", "noise_power", "psk_order", "sigma_ac2", "seed", "trials"]
SER_COLUMNS = ["ser", "stderr", "alice_ser", "alice_stderr", "charlie_ser", "charlie_stderr"]

COLUMNS: dict[ExperimentKind, list[str]] = {
    ExperimentKind.SER_VS_ALPHA: POINT_COLUMNS + ["alpha", "decoder"] + SER_COLUMNS + ["alpha_star"],
    ExperimentKind.ALPHA_STAR: POINT_COLUMNS
    + ["alpha_star", "iterations", "residual", "method", "fallback_steps", "alpha_bisection", "abs_diff"],
    ExperimentKind.SER_VS_SNR: POINT_COLUMNS + ["alpha_kind", "alpha", "decoder"] + SER_COLUMNS,
    ExperimentKind.TRADEOFF: POINT_COLUMNS
    + [
        "alpha_star",
        "charlie_pre",
        "charlie_pre_stderr",
        "charlie_pre_analytic",
        "alice_pre_unjammed",
        "alice_pre_jammed",
        "jammer_power",
        "alice_post",
        "alice_post_stderr",
        "charlie_post",
        "charlie_post_stderr",
        "joint_post",
        "joint_post_stderr",
    ],
    ExperimentKind.POWER_AUDIT: POINT_COLUMNS
    + ["alpha", "genie", "alice_bit", "symbols", "p_fcb", "p_fcb_stderr", "p_fab", "p_fab_stderr"],
    ExperimentKind.FFHD_COMPARE: POINT_COLUMNS
    + ["scheme", "interference", "alpha", "decoder"]
    + SER_COLUMNS,
    ExperimentKind.BOUND_CURVE: POINT_COLUMNS
    + [
        "alpha",
        "union_bound",
        "p_dom",
        "dominant_upper",
        "f1",
        "f2",
        "p1avg",
        "p3avg",
        "p2cavg_lb",
        "e2",
        "e2c",
        "alpha_star",
        "alpha_dagger",
    ],
}

# kinds whose rows reference alpha*
NEEDS_ALPHA_STAR = {
    ExperimentKind.SER_VS_ALPHA,
    ExperimentKind.ALPHA_STAR,
    ExperimentKind.SER_VS_SNR,
    ExperimentKind.FFHD_COMPARE,
    ExperimentKind.BOUND_CURVE,
    ExperimentKind.TRADEOFF,
}


def operating_points(config: ExperimentConfig) -> list[tuple[float, int]]:
    return [(snr, M) for snr in config.snr_db for M in config.psk_orders]


def noise_power(snr_db: float) -> float:
    return 10.0 ** (-snr_db / 10.0)


def solve_points(config: ExperimentConfig) -> Solutions:
    """alpha* for every (SNR, M); raises RegimeError for the first point without a crossing"""
    solutions: Solutions = {}
    for snr, M in operating_points(config):
        solution = solve_alpha_star(M, noise_power(snr), config.sigma_ac2)
        logger.info(
            "alpha*=%.6f at %.1f dB, M=%d (%d iterations, %s)",
            solution.alpha_star,
            snr,
            M,
            solution.iterations,
            solution.method.value,
        )
        solutions[(snr, M)] = solution
    return solutions


def _point(config: ExperimentConfig, snr: float, M: int) -> Row:
    return {
        "experiment": config.kind.value,
        "snr_db": snr,
        "noise_power": noise_power(snr),
        "psk_order": M,
        "sigma_ac2": config.sigma_ac2,
        "seed": config.seed,
        "trials": config.trials,
    }


def _ser(report) -> Row:
    return {
        "ser": report.joint_ser.mean,
        "stderr": report.joint_ser.stderr,
        "alice_ser": report.alice_ser.mean,
        "alice_stderr": report.alice_ser.stderr,
        "charlie_ser": report.charlie_ser.mean,
        "charlie_stderr": report.charlie_ser.stderr,
    }


def _params(config: ExperimentConfig, alpha: float, snr: float, M: int) -> SystemParams:
    return SystemParams(
        alpha=alpha, psk_order=M, noise_power=noise_power(snr), sigma_ac2=config.sigma_ac2
    )


def ser_vs_alpha(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for p, (snr, M) in enumerate(operating_points(config)):
        for k, alpha in enumerate(config.alphas):
            params = _params(config, alpha, snr, M)
            for decoder in config.decoders:
                if decoder == DecoderKind.FFHD:
                    continue
                # decoders share the stream at each grid point: paired comparisons
                report = run_scfffd(
                    params, decoder, config.trials, config.seed, config.workers, config.genie, (p, k)
                )
                rows.append(
                    _point(config, snr, M)
                    | {"alpha": alpha, "decoder": decoder.value}
                    | _ser(report)
                    | {"alpha_star": solutions[(snr, M)].alpha_star}
                )
    return rows


def alpha_star_table(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for snr, M in operating_points(config):
        solution = solutions[(snr, M)]
        reference = bisect_alpha_star(M, noise_power(snr), config.sigma_ac2)
        rows.append(
            _point(config, snr, M)
            | {
                "alpha_star": solution.alpha_star,
                "iterations": solution.iterations,
                "residual": solution.residual,
                "method": solution.method.value,
                "fallback_steps": solution.fallback_steps,
                "alpha_bisection": reference,
                "abs_diff": abs(solution.alpha_star - reference),
            }
        )
    return rows


def ser_vs_snr(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for p, (snr, M) in enumerate(operating_points(config)):
        alpha = solutions[(snr, M)].alpha_star
        params = _params(config, alpha, snr, M)
        for decoder in config.decoders:
            if decoder == DecoderKind.FFHD:
                continue
            report = run_scfffd(
                params, decoder, config.trials, config.seed, config.workers, config.genie, (p, 0)
            )
            rows.append(
                _point(config, snr, M)
                | {"alpha_kind": "alphaStar", "alpha": alpha, "decoder": decoder.value}
                | _ser(report)
            )
        if config.alpha_e:
            search = search_alpha_e(
                config.alphas,
                M,
                noise_power(snr),
                config.sigma_ac2,
                DecoderKind.JMAP,
                config.trials,
                config.seed,
                config.workers,
                stream_key=(p, 1),
            )
            best = search.alphas.index(search.alpha_e)
            rows.append(
                _point(config, snr, M)
                | {"alpha_kind": "alphaE", "alpha": search.alpha_e, "decoder": DecoderKind.JMAP.value}
                | {"ser": search.ser_at_alpha_e, "stderr": search.stderr[best]}
                | {k: "" for k in SER_COLUMNS[2:]}
            )
    return rows


def tradeoff(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for p, (snr, M) in enumerate(operating_points(config)):
        record = run_tradeoff(
            M,
            noise_power(snr),
            config.sigma_ac2,
            config.trials,
            config.seed,
            config.workers,
            config.jammer_power,
            alpha_star=solutions[(snr, M)].alpha_star,
            stream_key=(p,),
        )
        rows.append(
            _point(config, snr, M)
            | {
                "alpha_star": record.alpha_star,
                "charlie_pre": record.charlie_pre.mean,
                "charlie_pre_stderr": record.charlie_pre.stderr,
                "charlie_pre_analytic": record.charlie_pre_analytic,
                "alice_pre_unjammed": record.alice_pre_unjammed,
                "alice_pre_jammed": record.alice_pre_jammed,
                "jammer_power": record.jammer_power,
                "alice_post": record.alice_post.mean,
                "alice_post_stderr": record.alice_post.stderr,
                "charlie_post": record.charlie_post.mean,
                "charlie_post_stderr": record.charlie_post.stderr,
                "joint_post": record.joint_post.mean,
                "joint_post_stderr": record.joint_post.stderr,
            }
        )
    return rows


def power_audit_rows(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for p, (snr, M) in enumerate(operating_points(config)):
        for k, alpha in enumerate(config.alphas):
            audit = power_audit(
                _params(config, alpha, snr, M),
                config.trials,
                config.genie,
                config.seed,
                config.workers,
                (p, k),
            )
            for bit, fcb, fab in (
                (0, audit.fcb_given_x0, audit.fab_given_x0),
                (1, audit.fcb_given_x1, audit.fab_given_x1),
            ):
                rows.append(
                    _point(config, snr, M)
                    | {
                        "alpha": alpha,
                        "genie": config.genie,
                        "alice_bit": bit,
                        "symbols": fcb.trials,
                        "p_fcb": fcb.mean,
                        "p_fcb_stderr": fcb.stderr,
                        "p_fab": fab.mean,
                        "p_fab_stderr": fab.stderr,
                    }
                )
    return rows


def ffhd_compare(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for p, (snr, M) in enumerate(operating_points(config)):
        alpha = solutions[(snr, M)].alpha_star
        report = run_scfffd(
            _params(config, alpha, snr, M),
            DecoderKind.JD,
            config.trials,
            config.seed,
            config.workers,
            stream_key=(p, 0),
        )
        rows.append(
            _point(config, snr, M)
            | {"scheme": "SC-FFFD", "interference": "", "alpha": alpha, "decoder": DecoderKind.JD.value}
            | _ser(report)
        )
        for q, interference in enumerate(config.interference, start=1):
            report = run_ffhd(
                M,
                noise_power(snr),
                config.sigma_ac2,
                interference,
                config.trials,
                config.seed,
                config.workers,
                (p, q),
            )
            rows.append(
                _point(config, snr, M)
                | {
                    "scheme": "FFHD",
                    "interference": interference,
                    "alpha": "",
                    "decoder": DecoderKind.FFHD.value,
                }
                | _ser(report)
            )
    return rows


def bound_curve(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    rows = []
    for snr, M in operating_points(config):
        try:
            dagger = solve_alpha_dagger(M, noise_power(snr), config.sigma_ac2).alpha_star
        except RegimeError as exc:
            logger.warning("no alpha dagger at %.1f dB, M=%d: %s", snr, M, exc)
            dagger = math.nan
        for alpha in config.alphas:
            params = _params(config, alpha, snr, M)
            bounds = avg_bounds(params, crossover_probs(params))
            rows.append(
                _point(config, snr, M)
                | {
                    "alpha": alpha,
                    "union_bound": bounds.union_bound,
                    "p_dom": bounds.p_dom,
                    "dominant_upper": bounds.dominant_upper,
                    "f1": bounds.f1,
                    "f2": bounds.f2,
                    "p1avg": bounds.p1avg,
                    "p3avg": bounds.p3avg,
                    "p2cavg_lb": bounds.p2cavg_lb,
                    "e2": bounds.e2,
                    "e2c": bounds.e2c,
                    "alpha_star": solutions[(snr, M)].alpha_star,
                    "alpha_dagger": dagger,
                }
            )
    return rows


BUILDERS: dict[ExperimentKind, Callable[[ExperimentConfig, Solutions], list[Row]]] = {
    ExperimentKind.SER_VS_ALPHA: ser_vs_alpha,
    ExperimentKind.ALPHA_STAR: alpha_star_table,
    ExperimentKind.SER_VS_SNR: ser_vs_snr,
    ExperimentKind.TRADEOFF: tradeoff,
    ExperimentKind.POWER_AUDIT: power_audit_rows,
    ExperimentKind.FFHD_COMPARE: ffhd_compare,
    ExperimentKind.BOUND_CURVE: bound_curve,
}


def build_rows(config: ExperimentConfig, solutions: Solutions) -> list[Row]:
    return BUILDERS[config.kind](config, solutions)
