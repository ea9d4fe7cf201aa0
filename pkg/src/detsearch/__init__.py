"""Deterministic quantum search on a dense statevector simulator."""

from .operators import AugmentedProblem, SearchProblem
from .planner import DeterministicPlan, compute_k, make_plan, predicted_success
from .search import (
    InvariantViolation,
    MultiTargetTrace,
    RunReport,
    amplitude_amplification,
    deterministic_search,
    grover_search,
    multi_target_exact_search,
)
from .simcore import StateVector, from_amplitudes, uniform_state

__version__ = "0.1.0"

__all__ = [
    "AugmentedProblem",
    "DeterministicPlan",
    "InvariantViolation",
    "MultiTargetTrace",
    "RunReport",
    "SearchProblem",
    "StateVector",
    "amplitude_amplification",
    "compute_k",
    "deterministic_search",
    "from_amplitudes",
    "grover_search",
    "make_plan",
    "multi_target_exact_search",
    "predicted_success",
    "uniform_state",
]
