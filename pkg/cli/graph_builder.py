import logging
import time
from typing import Any, Dict

from langgraph.graph import END, StateGraph

from .config import ExperimentConfig
from .graph_nodes import (
    EXIT_RUNTIME,
    emit_node,
    prepare_node,
    should_emit_or_end,
    should_simulate_or_end,
    simulate_node,
    solve_alpha_node,
)
from .graph_state import GraphState

logger = logging.getLogger(__name__)


def create_experiment_workflow():
    """Returns the compiled experiment workflow"""

    workflow = StateGraph(GraphState)

    workflow.add_node("prepare", prepare_node)
    workflow.add_node("solve_alpha", solve_alpha_node)
    workflow.add_node("simulate", simulate_node)
    workflow.add_node("emit", emit_node)

    workflow.set_entry_point("prepare")
    workflow.add_edge("prepare", "solve_alpha")

    # a regime failure ends the run without output
    workflow.add_conditional_edges(
        "solve_alpha",
        should_simulate_or_end,
        {"simulate": "simulate", "end": END},
    )
    workflow.add_conditional_edges(
        "simulate",
        should_emit_or_end,
        {"emit": "emit", "end": END},
    )
    workflow.add_edge("emit", END)

    return workflow.compile()


def initial_state(config: ExperimentConfig) -> GraphState:
    return GraphState(
        config=config,
        solutions={},
        columns=[],
        rows=[],
        csv_path=None,
        meta_path=None,
        started_at=time.time(),
        wall_time=None,
        current_node="",
        execution_log=[],
        success=False,
        exit_code=EXIT_RUNTIME,
        error_message=None,
    )


class ExperimentWorkflow:
    """
    Wrapper around the compiled graph
    """

    def __init__(self):
        self.app = create_experiment_workflow()

    def run_workflow(self, state: Dict[str, Any]) -> Dict[str, Any]:
        """
        Run the workflow from the given initial state

        Returns:
            Final state; on an unexpected failure the initial state with
            success=False, exit_code=1 and the error message.
        """
        try:
            return self.app.invoke(state)
        except Exception as e:
            logger.exception("Workflow execution error")
            return {
                **state,
                "success": False,
                "exit_code": EXIT_RUNTIME,
                "error_message": str(e),
                "execution_log": state.get("execution_log", [])
                + [{"node": "workflow", "status": "error", "error": str(e)}],
            }


_workflow: ExperimentWorkflow | None = None


def get_workflow() -> ExperimentWorkflow:
    """
    Get the shared workflow instance (compiled on first use)
    """
    global _workflow
    if _workflow is None:
        _workflow = ExperimentWorkflow()
    return _workflow
