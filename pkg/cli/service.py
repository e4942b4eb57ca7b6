import logging
from typing import List, Optional

from pydantic import BaseModel

from .config import ExperimentConfig
from .formatters import format_summary_as_markdown
from .graph_builder import get_workflow, initial_state

logger = logging.getLogger(__name__)


class ExperimentResult(BaseModel):
    success: bool
    exit_code: int
    csv_path: Optional[str] = None
    meta_path: Optional[str] = None
    rows: int = 0
    wall_time: Optional[float] = None
    error_message: Optional[str] = None
    nodes: List[str] = []


class ExperimentService:
    """
    Runs experiments through the workflow and reports the outcome
    """

    def __init__(self) -> None:
        self.workflow = get_workflow()

    def run(self, config: ExperimentConfig) -> ExperimentResult:
        final_state = self.workflow.run_workflow(initial_state(config))
        logger.info("\n%s", format_summary_as_markdown(final_state))
        return ExperimentResult(
            success=final_state.get("success", False),
            exit_code=final_state.get("exit_code", 1),
            csv_path=final_state.get("csv_path"),
            meta_path=final_state.get("meta_path"),
            rows=len(final_state.get("rows") or []),
            wall_time=final_state.get("wall_time"),
            error_message=final_state.get("error_message"),
            nodes=[entry["node"] for entry in final_state.get("execution_log", [])],
        )


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    return ExperimentService().run(config)
