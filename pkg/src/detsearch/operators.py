"""Search problems and the diagonal/reflection operators built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

import numpy as np

from . import simcore
from .simcore import DiagonalPhaseOperator, StateVector


@dataclass(frozen=True)
class SearchProblem:
    """Targets over ``num_qubits`` data qubits and the state they are searched in.

    ``initial_state`` of ``None`` means the uniform superposition.
    """

    num_qubits: int
    targets: frozenset[int]
    initial_state: Optional[StateVector] = None
    p: float = field(init=False)

    def __post_init__(self):
        simcore._check_qubit_count(self.num_qubits)
        targets = self.targets
        if isinstance(targets, (str, int)):
            targets = [targets]
        targets = list(targets)
        indices = [_target_index(t, self.num_qubits) for t in targets]
        if len(set(indices)) != len(indices):
            raise ValueError(f"duplicate targets: {targets}")
        if not indices:
            raise ValueError("at least one target is required")
        dim = 1 << self.num_qubits
        if len(indices) == dim:
            raise ValueError("every basis state is a target (p = 1); nothing to search")
        object.__setattr__(self, "targets", frozenset(indices))
        if self.initial_state is not None and self.initial_state.num_qubits != self.num_qubits:
            raise ValueError(
                f"initial state has {self.initial_state.num_qubits} qubits, problem has {self.num_qubits}"
            )
        p = simcore.probability_mass(self.prepared_state(), self.targets)
        if p <= 0.0:
            raise ValueError("initial state has no weight on the targets (p = 0)")
        object.__setattr__(self, "p", p)

    @property
    def n_states(self) -> int:
        return 1 << self.num_qubits

    @property
    def n_targets(self) -> int:
        return len(self.targets)

    @property
    def is_uniform(self) -> bool:
        return self.initial_state is None

    def prepared_state(self) -> StateVector:
        if self.initial_state is None:
            return simcore.uniform_state(self.num_qubits)
        return self.initial_state

    def sorted_targets(self) -> list[int]:
        return sorted(self.targets)


def _target_index(target: Union[str, int], num_qubits: int) -> int:
    if isinstance(target, str):
        if len(target) != num_qubits:
            raise ValueError(f"target {target!r} does not have {num_qubits} bits")
        index = simcore.parse_bitstring(target)
    else:
        index = int(target)
    if not 0 <= index < (1 << num_qubits):
        raise ValueError(f"target {target!r} out of range for {num_qubits} qubits")
    return index


@dataclass(frozen=True)
class AugmentedProblem:
    """A problem with one auxiliary qubit prepared by ``R_y(phi)``.

    The auxiliary is the most significant qubit, so the new targets (auxiliary
    in ``|0>``) carry the same indices as the original targets.
    """

    base: SearchProblem
    phi: float

    @property
    def num_qubits(self) -> int:
        return self.base.num_qubits + 1

    @property
    def new_targets(self) -> frozenset[int]:
        return self.base.targets

    @property
    def auxiliary_qubit(self) -> int:
        return self.base.num_qubits


def state_with_target_mass(p: float, num_qubits: int, targets: Iterable[int] = (0,)) -> StateVector:
    """Real state whose weight on ``targets`` is exactly ``p``, spread evenly."""
    targets = sorted(set(int(t) for t in targets))
    dim = 1 << num_qubits
    m = len(targets)
    if not 0 < m < dim:
        raise ValueError(f"need 0 < len(targets) < {dim}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    amps = np.full(dim, math.sqrt((1.0 - p) / (dim - m)), dtype=np.complex128)
    amps[targets] = math.sqrt(p / m)
    return simcore.from_amplitudes(amps)


def build_oracle(problem: SearchProblem) -> DiagonalPhaseOperator:
    return DiagonalPhaseOperator(problem.num_qubits, problem.targets)


def build_controlled_oracle(aug: AugmentedProblem) -> DiagonalPhaseOperator:
    """Oracle that fires only when the auxiliary qubit is ``|0>``."""
    return DiagonalPhaseOperator(aug.num_qubits, aug.new_targets)


def build_s0(num_qubits: int) -> DiagonalPhaseOperator:
    if num_qubits < 1:
        raise ValueError(f"num_qubits must be >= 1, got {num_qubits}")
    return DiagonalPhaseOperator(num_qubits, frozenset({0}))


def build_target_inv(found: Iterable[int], num_qubits: int) -> DiagonalPhaseOperator:
    """Re-flip previously found targets so the oracle leaves them untouched."""
    return DiagonalPhaseOperator(num_qubits, frozenset(found))


def build_diffusion_axis(problem: Union[SearchProblem, AugmentedProblem]) -> StateVector:
    """The prepared initial state, used as the reflection axis of the diffusion step."""
    if isinstance(problem, AugmentedProblem):
        ancilla = simcore.apply_single_qubit(
            simcore.basis_state(1, 0), simcore.ry(problem.phi), 0
        )
        return simcore.tensor_with_ancilla(problem.base.prepared_state(), ancilla)
    return problem.prepared_state()


GATE_LEVEL_MAX_QUBITS = 12


def uniform_diffusion_gate_level(num_qubits: int):
    """Return a callable applying ``H^n S0 H^n`` gate by gate.

    This equals ``-reflect_about(uniform)``; it exists as a cross-check of the
    dense reflection for the uniform case.
    """
    if not 1 <= num_qubits <= GATE_LEVEL_MAX_QUBITS:
        raise ValueError(f"gate-level diffusion supports 1..{GATE_LEVEL_MAX_QUBITS} qubits, got {num_qubits}")
    s0 = build_s0(num_qubits)

    def apply(state: StateVector) -> StateVector:
        if state.num_qubits != num_qubits:
            raise ValueError(f"expected a {num_qubits}-qubit state, got {state.num_qubits}")
        for q in range(num_qubits):
            state = simcore.apply_single_qubit(state, simcore.H, q)
        state = simcore.apply_diagonal(state, s0)
        for q in range(num_qubits):
            state = simcore.apply_single_qubit(state, simcore.H, q)
        return state

    return apply
