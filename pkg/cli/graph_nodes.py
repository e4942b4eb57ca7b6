import logging
import platform
import time

import numpy as np
import scipy

from alphasolve import AlphaSolveError
from utils.store import save_csv_store, save_json_store

from .experiments import COLUMNS, NEEDS_ALPHA_STAR, build_rows, operating_points, solve_points
from .graph_state import GraphState

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_REGIME = 3


def prepare_node(state: GraphState) -> GraphState:
    """Resolve the output location and the operating points"""
    config = state["config"]
    new_state = state.copy()
    new_state["current_node"] = "prepare"
    new_state["columns"] = COLUMNS[config.kind]
    new_state["csv_path"] = str(config.output_path())
    new_state["execution_log"] = state["execution_log"] + [
        {
            "node": "prepare",
            "status": "completed",
            "points": len(operating_points(config)),
            "alphas": len(config.alphas),
        }
    ]
    logger.info(
        "%s: %d operating point(s), %d alpha value(s), %d trials, seed %d, %d worker(s)",
        config.kind.value,
        len(operating_points(config)),
        len(config.alphas),
        config.trials,
        config.seed,
        config.workers,
    )
    return new_state


def solve_alpha_node(state: GraphState) -> GraphState:
    """alpha* for every operating point the experiment needs"""
    config = state["config"]
    new_state = state.copy()
    new_state["current_node"] = "solve_alpha"

    if config.kind not in NEEDS_ALPHA_STAR:
        new_state["solutions"] = {}
        new_state["execution_log"] = state["execution_log"] + [
            {"node": "solve_alpha", "status": "skipped"}
        ]
        return new_state

    try:
        solutions = solve_points(config)
    except AlphaSolveError as e:
        logger.error("alpha* solver failed: %s", e)
        new_state["success"] = False
        new_state["exit_code"] = EXIT_REGIME
        new_state["error_message"] = str(e)
        new_state["execution_log"] = state["execution_log"] + [
            {"node": "solve_alpha", "status": "error", "error": str(e)}
        ]
        return new_state

    new_state["solutions"] = solutions
    new_state["execution_log"] = state["execution_log"] + [
        {
            "node": "solve_alpha",
            "status": "completed",
            "solutions": len(solutions),
        }
    ]
    return new_state


def simulate_node(state: GraphState) -> GraphState:
    """Run the experiment and collect its rows"""
    config = state["config"]
    new_state = state.copy()
    new_state["current_node"] = "simulate"
    start = time.perf_counter()
    try:
        rows = build_rows(config, state["solutions"])
    except AlphaSolveError as e:
        logger.error("experiment hit a solver failure: %s", e)
        new_state["success"] = False
        new_state["exit_code"] = EXIT_REGIME
        new_state["error_message"] = str(e)
        new_state["execution_log"] = state["execution_log"] + [
            {"node": "simulate", "status": "error", "error": str(e)}
        ]
        return new_state

    new_state["rows"] = rows
    new_state["execution_log"] = state["execution_log"] + [
        {
            "node": "simulate",
            "status": "completed",
            "rows": len(rows),
            "seconds": round(time.perf_counter() - start, 3),
        }
    ]
    return new_state


def _solver_metadata(state: GraphState) -> list[dict]:
    return [
        {"snr_db": snr, "psk_order": M, **solution.model_dump(mode="json")}
        for (snr, M), solution in sorted(state.get("solutions", {}).items())
    ]


def emit_node(state: GraphState) -> GraphState:
    """Write the CSV and its metadata sidecar; timing goes to the sidecar only"""
    config = state["config"]
    new_state = state.copy()
    new_state["current_node"] = "emit"

    csv_path = save_csv_store(state["csv_path"], state["columns"], state["rows"])
    wall_time = time.time() - state["started_at"]
    metadata = {
        "experiment": config.kind.value,
        "seed": config.seed,
        "config": config.echo(),
        "rows": len(state["rows"]),
        "columns": state["columns"],
        "alpha_solver": _solver_metadata(state),
        "wall_time_seconds": wall_time,
        "execution_log": state["execution_log"],
        "versions": {
            "python": platform.python_version(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
        },
    }
    meta_path = save_json_store(csv_path, metadata)

    new_state["meta_path"] = str(meta_path)
    new_state["wall_time"] = wall_time
    new_state["success"] = True
    new_state["exit_code"] = EXIT_OK
    new_state["execution_log"] = state["execution_log"] + [
        {"node": "emit", "status": "completed", "csv": str(csv_path)}
    ]
    return new_state


def should_simulate_or_end(state: GraphState) -> str:
    """Stop early when the solver reported a regime failure"""
    if state.get("error_message"):
        logger.info("Skipping simulation: %s", state["error_message"])
        return "end"
    return "simulate"


def should_emit_or_end(state: GraphState) -> str:
    if state.get("error_message"):
        return "end"
    return "emit"
