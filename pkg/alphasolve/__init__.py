from .schema import (
    AlphaSearch,
    AlphaSolution,
    AlphaSolveError,
    ConvergenceError,
    RegimeError,
    SolveMethod,
)
from .solver import bisect_alpha_star, f_gap, solve_alpha_dagger, solve_alpha_star
from .search import search_alpha_e

__all__ = [
    "AlphaSearch",
    "AlphaSolution",
    "AlphaSolveError",
    "ConvergenceError",
    "RegimeError",
    "SolveMethod",
    "bisect_alpha_star",
    "f_gap",
    "search_alpha_e",
    "solve_alpha_dagger",
    "solve_alpha_star",
]
