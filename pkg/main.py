"""
Command-line entry point.

    python main.py serVsAlpha --snr-db 35 --psk-order 4,8 --decoder JMAP,JMAX,JD
    python main.py alphaStar --snr-db 15,20,25,30,35,40
    python main.py powerAudit --genie --alpha-start 0.1 --alpha-stop 0.9 --alpha-step 0.2

Exit status: 0 success, 1 unexpected failure, 2 invalid configuration,
3 no alpha* crossing at a requested operating point.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

load_dotenv()

from cli.config import ConfigError, ExperimentKind, build_config, load_config_file  # noqa: E402
from cli.service import ExperimentService  # noqa: E402

EXIT_CONFIG = 2

logger = logging.getLogger("scfffd")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scfffd",
        description="SC-FFFD anti-jamming relay experiments",
    )
    parser.add_argument(
        "--log-level",
        default=os.getenv("SCFFFD_LOG_LEVEL", "INFO"),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file; flags override its values")
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--out", help="CSV output path")
    common.add_argument("--alpha-start", type=float)
    common.add_argument("--alpha-stop", type=float)
    common.add_argument("--alpha-step", type=float)
    common.add_argument("--snr-db", help="comma separated, e.g. 15,20,25")
    common.add_argument("--psk-order", help="comma separated PSK orders")
    common.add_argument("--sigma-ac2", type=float)
    common.add_argument("--interference", help="comma separated interference powers (ffhdCompare)")
    common.add_argument("--decoder", help="comma separated: JMAP,JMAX,JD")
    common.add_argument("--genie", action="store_true", default=None)
    common.add_argument("--alpha-e", action="store_true", default=None, help="add the exhaustive alpha_E row (serVsSnr)")
    common.add_argument("--jammer-power", type=float, help="jammed-OOK reference power (tradeoff)")

    subparsers = parser.add_subparsers(dest="kind", required=True)
    for kind in ExperimentKind:
        subparsers.add_parser(kind.value, parents=[common])
    return parser


FLAG_FIELDS = {
    "seed": "seed",
    "trials": "trials",
    "workers": "workers",
    "out": "out",
    "alpha_start": "alpha_start",
    "alpha_stop": "alpha_stop",
    "alpha_step": "alpha_step",
    "snr_db": "snr_db",
    "psk_order": "psk_orders",
    "sigma_ac2": "sigma_ac2",
    "interference": "interference",
    "decoder": "decoders",
    "genie": "genie",
    "alpha_e": "alpha_e",
    "jammer_power": "jammer_power",
}


def flag_values(args: argparse.Namespace) -> Dict[str, Any]:
    values = {field: getattr(args, flag) for flag, field in FLAG_FIELDS.items()}
    values["kind"] = args.kind
    return {k: v for k, v in values.items() if v is not None}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else 0

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        file_values = load_config_file(args.config) if args.config else {}
        config = build_config(file_values, flag_values(args))
    except (ConfigError, ValidationError) as e:
        logger.error("invalid configuration: %s", e)
        return EXIT_CONFIG

    result = ExperimentService().run(config)
    if not result.success:
        logger.error("%s failed: %s", config.kind.value, result.error_message)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
