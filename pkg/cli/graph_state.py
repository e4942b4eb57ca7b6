from typing import Any, Dict, List, Optional, TypedDict

from alphasolve import AlphaSolution

from .config import ExperimentConfig


class GraphState(TypedDict):
    """State carried through the experiment workflow"""

    config: ExperimentConfig

    # alpha* per (snr_db, M)
    solutions: Dict[tuple, AlphaSolution]

    # Simulation phase
    columns: List[str]
    rows: List[Dict[str, Any]]

    # Output
    csv_path: Optional[str]
    meta_path: Optional[str]

    started_at: float
    wall_time: Optional[float]

    # Node execution tracking
    current_node: str
    execution_log: List[Dict[str, Any]]

    # Results
    success: bool
    exit_code: int
    error_message: Optional[str]
