"""Search drivers: standard Grover / amplitude amplification, deterministic
search with an auxiliary qubit, and exact multi-target search."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import operators, planner, simcore
from .operators import AugmentedProblem, SearchProblem
from .planner import DeterministicPlan
from .simcore import DiagonalPhaseOperator, StateVector

CERTAINTY_TOL = 1e-6


class InvariantViolation(RuntimeError):
    """A result broke a guarantee the algorithm is supposed to provide."""


class Mode(str, enum.Enum):
    STANDARD = "standard"
    DETERMINISTIC = "deterministic"
    MULTI_TARGET = "multi_target"


@dataclass
class Snapshot:
    iteration: int
    stage: str
    amplitudes: np.ndarray


@dataclass
class RunReport:
    mode: Mode
    num_qubits: int
    register_qubits: int
    targets: list[int]
    initial_p: float
    iterations_used: int
    plan: Optional[DeterministicPlan]
    final_distribution: list[tuple[int, float]]
    success_probability: float
    measured_outcome: Optional[str]
    rng_seed: int
    snapshots: list[Snapshot] = field(default_factory=list)

    def distribution_array(self) -> np.ndarray:
        return np.array([prob for _, prob in self.final_distribution])


@dataclass
class MultiTargetTrace:
    executions: list[tuple[str, RunReport]]
    remaining_before_each: list[frozenset[int]]

    @property
    def found(self) -> list[str]:
        return [bits for bits, _ in self.executions]


def _run_iterations(
    state: StateVector,
    oracle_ops: list[DiagonalPhaseOperator],
    axis: StateVector,
    iterations: int,
    snapshots: Optional[list[Snapshot]],
) -> StateVector:
    for it in range(1, iterations + 1):
        for op in oracle_ops:
            state = simcore.apply_diagonal(state, op)
        if snapshots is not None:
            snapshots.append(Snapshot(it, "oracle", state.copy_amplitudes()))
        state = simcore.reflect_about(state, axis)
        if snapshots is not None:
            snapshots.append(Snapshot(it, "diffusion", state.copy_amplitudes()))
    return state


def _finish(
    mode: Mode,
    problem: SearchProblem,
    state: StateVector,
    success_targets: Iterable[int],
    p: float,
    iterations: int,
    plan: Optional[DeterministicPlan],
    seed: int,
    snapshots: Optional[list[Snapshot]],
) -> RunReport:
    n = problem.num_qubits
    data_qubits = range(n)
    _, data_marginal = simcore.marginal_distribution(state, data_qubits)
    success = float(np.sum(data_marginal[sorted(success_targets)]))
    outcome, _ = simcore.measure_subset(state, data_qubits, seed)
    probs = state.probabilities()
    return RunReport(
        mode=mode,
        num_qubits=n,
        register_qubits=state.num_qubits,
        targets=problem.sorted_targets(),
        initial_p=p,
        iterations_used=iterations,
        plan=plan,
        final_distribution=[(i, float(x)) for i, x in enumerate(probs)],
        success_probability=success,
        measured_outcome=outcome,
        rng_seed=seed,
        snapshots=snapshots or [],
    )


def grover_search(problem: SearchProblem, iterations: int, seed: int = 0, trace: bool = False) -> RunReport:
    """Apply ``iterations`` rounds of oracle then reflection about the initial state."""
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    snapshots = [] if trace else None
    start = problem.prepared_state()
    if snapshots is not None:
        snapshots.append(Snapshot(0, "init", start.copy_amplitudes()))
    state = _run_iterations(start, [operators.build_oracle(problem)], start, iterations, snapshots)
    return _finish(Mode.STANDARD, problem, state, problem.targets, problem.p, iterations, None, seed, snapshots)


def amplitude_amplification(problem: SearchProblem, iterations: int, seed: int = 0, trace: bool = False) -> RunReport:
    """Grover iteration around an explicitly supplied initial state."""
    if problem.initial_state is None:
        raise ValueError("amplitude_amplification needs an explicit initial state")
    if not problem.p < 1.0:
        raise ValueError(f"initial state already has all its weight on the targets (p={problem.p!r})")
    return grover_search(problem, iterations, seed=seed, trace=trace)


def _deterministic_run(
    problem: SearchProblem,
    seed: int,
    found: frozenset[int] = frozenset(),
    trace: bool = False,
    mode: Mode = Mode.DETERMINISTIC,
) -> RunReport:
    remaining = problem.targets - found
    start = problem.prepared_state()
    p = simcore.probability_mass(start, remaining)
    if not (0.0 < p < 1.0):
        raise ValueError(f"deterministic search needs 0 < p < 1 on the remaining targets, got p={p!r}")
    plan = planner.make_plan(p)

    if plan.needs_auxiliary:
        aug = AugmentedProblem(problem, plan.phi)
        axis = operators.build_diffusion_axis(aug)
        ops = [operators.build_controlled_oracle(aug)]
        width = aug.num_qubits
    else:
        axis = start
        ops = [operators.build_oracle(problem)]
        width = problem.num_qubits
    if found:
        ops.append(operators.build_target_inv(found, width))

    snapshots = [] if trace else None
    if snapshots is not None:
        snapshots.append(Snapshot(0, "init", axis.copy_amplitudes()))
    state = _run_iterations(axis, ops, axis, plan.k_prime, snapshots)
    report = _finish(mode, problem, state, remaining, p, plan.k_prime, plan, seed, snapshots)
    if report.success_probability < 1.0 - CERTAINTY_TOL:
        raise InvariantViolation(
            f"deterministic run reached success {report.success_probability!r} at p={p!r}"
        )
    return report


def deterministic_search(problem: SearchProblem, seed: int = 0, trace: bool = False) -> RunReport:
    """Find a target with certainty using at most ``floor(k) + 1`` iterations.

    When the ideal iteration count for ``problem.p`` is not a whole number, an
    auxiliary qubit rotated by ``R_y(phi)`` lowers the effective success
    probability so the count becomes exact.  The oracle then only marks
    targets whose auxiliary is ``|0>`` and the diffusion reflects about the
    joint auxiliary-and-data initial state.  Only data qubits are measured.
    """
    return _deterministic_run(problem, seed, trace=trace)


def multi_target_exact_search(problem: SearchProblem, seed: int = 0) -> MultiTargetTrace:
    """Recover every target in exactly ``M`` deterministic executions.

    Execution ``j`` (seeded with ``seed + j``) re-plans for the mass of the
    targets not yet found and cancels the oracle on found ones with Target-Inv.
    """
    found: list[int] = []
    executions: list[tuple[str, RunReport]] = []
    remaining_before: list[frozenset[int]] = []
    for j in range(problem.n_targets):
        found_set = frozenset(found)
        remaining_before.append(problem.targets - found_set)
        report = _deterministic_run(problem, seed + j, found=found_set, mode=Mode.MULTI_TARGET)
        index = simcore.parse_bitstring(report.measured_outcome)
        if index not in problem.targets or index in found_set:
            raise InvariantViolation(f"execution {j} measured {report.measured_outcome}, not a new target")
        found.append(index)
        executions.append((report.measured_outcome, report))
    return MultiTargetTrace(executions=executions, remaining_before_each=remaining_before)
