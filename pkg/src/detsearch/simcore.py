"""Dense statevector simulation of an n-qubit register.

Index convention: basis index ``i`` is the big-endian reading of the
bitstring, so qubit ``q`` carries weight ``2**q`` and the leftmost character
of a bitstring belongs to the highest qubit.  An auxiliary qubit appended with
:func:`tensor_with_ancilla` becomes the most significant qubit, which keeps the
original basis indices unchanged in its ``|0>`` branch.

All operations are pure: the input state is never modified.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

NORM_TOL = 1e-9
UNITARY_TOL = 1e-12
DEFAULT_MAX_QUBITS = 24


def max_qubits() -> int:
    """Qubit cap, overridable through ``DETSEARCH_MAX_QUBITS``."""
    raw = os.environ.get("DETSEARCH_MAX_QUBITS")
    if raw is None:
        return DEFAULT_MAX_QUBITS
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"DETSEARCH_MAX_QUBITS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"DETSEARCH_MAX_QUBITS must be >= 1, got {cap}")
    return cap


def _check_qubit_count(num_qubits: int) -> None:
    cap = max_qubits()
    if not 1 <= num_qubits <= cap:
        raise ValueError(f"num_qubits must be in [1, {cap}], got {num_qubits}")


class StateVector:
    """Normalized complex amplitudes over ``num_qubits`` qubits.

    Instances are treated as immutable values; the amplitude buffer is marked
    read-only.
    """

    __slots__ = ("_num_qubits", "_amps")

    def __init__(self, amplitudes: np.ndarray, num_qubits: int):
        # Trusted constructor; use from_amplitudes() for validated input.
        amps = np.asarray(amplitudes, dtype=np.complex128)
        if amps.shape != (1 << num_qubits,):
            raise ValueError(
                f"expected {1 << num_qubits} amplitudes for {num_qubits} qubits, got shape {amps.shape}"
            )
        amps.setflags(write=False)
        self._num_qubits = num_qubits
        self._amps = amps

    @property
    def num_qubits(self) -> int:
        return self._num_qubits

    @property
    def dim(self) -> int:
        return self._amps.shape[0]

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    def probabilities(self) -> np.ndarray:
        return self._amps.real**2 + self._amps.imag**2

    def norm_sq(self) -> float:
        return float(np.sum(self.probabilities()))

    def copy_amplitudes(self) -> np.ndarray:
        return np.array(self._amps, dtype=np.complex128, copy=True)

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self._num_qubits})"


@dataclass(frozen=True)
class SingleQubitGate:
    """A 2x2 unitary."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"single-qubit gate must be 2x2, got {m.shape}")
        if not np.allclose(m @ m.conj().T, np.eye(2), rtol=0.0, atol=UNITARY_TOL):
            raise ValueError("gate matrix is not unitary")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


H = SingleQubitGate(np.array([[1, 1], [1, -1]]) / math.sqrt(2))
X = SingleQubitGate(np.array([[0, 1], [1, 0]]))


def ry(phi: float) -> SingleQubitGate:
    """R_y rotation; ``ry(phi)|0> = cos(phi/2)|0> + sin(phi/2)|1>``."""
    c, s = math.cos(phi / 2), math.sin(phi / 2)
    return SingleQubitGate(np.array([[c, -s], [s, c]]))


@dataclass(frozen=True)
class DiagonalPhaseOperator:
    """Diagonal operator with -1 on ``flipped`` indices and +1 elsewhere."""

    num_qubits: int
    flipped: frozenset[int]

    def __post_init__(self):
        flipped = frozenset(int(i) for i in self.flipped)
        dim = 1 << self.num_qubits
        bad = [i for i in flipped if not 0 <= i < dim]
        if bad:
            raise ValueError(f"flipped indices out of range [0, {dim}): {sorted(bad)}")
        object.__setattr__(self, "flipped", flipped)

    def diagonal(self) -> np.ndarray:
        d = np.ones(1 << self.num_qubits)
        d[self.index_array()] = -1.0
        return d

    def index_array(self) -> np.ndarray:
        return np.fromiter(sorted(self.flipped), dtype=np.int64, count=len(self.flipped))


def uniform_state(num_qubits: int) -> StateVector:
    _check_qubit_count(num_qubits)
    dim = 1 << num_qubits
    return StateVector(np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128), num_qubits)


def basis_state(num_qubits: int, index: int) -> StateVector:
    _check_qubit_count(num_qubits)
    dim = 1 << num_qubits
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range [0, {dim})")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(amps, num_qubits)


def from_amplitudes(values: Iterable[complex] | np.ndarray) -> StateVector:
    """Validated construction from a power-of-two length amplitude array."""
    amps = np.array(values, dtype=np.complex128).ravel()
    dim = amps.shape[0]
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"amplitude count must be a power of two >= 2, got {dim}")
    num_qubits = dim.bit_length() - 1
    _check_qubit_count(num_qubits)
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(f"amplitudes are not normalized: sum |a|^2 = {norm_sq!r}")
    return StateVector(amps, num_qubits)


def _check_qubit_index(state: StateVector, qubit: int) -> None:
    if not 0 <= qubit < state.num_qubits:
        raise ValueError(f"qubit index {qubit} out of range [0, {state.num_qubits})")


def apply_single_qubit(state: StateVector, gate: SingleQubitGate, qubit_index: int) -> StateVector:
    _check_qubit_index(state, qubit_index)
    # axes: (higher qubits, target qubit, lower qubits)
    view = state.amplitudes.reshape(-1, 2, 1 << qubit_index)
    out = np.einsum("ab,ibj->iaj", gate.matrix, view)
    return StateVector(out.reshape(-1), state.num_qubits)


def apply_diagonal(state: StateVector, op: DiagonalPhaseOperator) -> StateVector:
    if op.num_qubits != state.num_qubits:
        raise ValueError(
            f"operator acts on {op.num_qubits} qubits, state has {state.num_qubits}"
        )
    out = state.copy_amplitudes()
    idx = op.index_array()
    out[idx] = -out[idx]
    return StateVector(out, state.num_qubits)


def reflect_about(state: StateVector, axis: StateVector) -> StateVector:
    """Return ``(2|axis><axis| - I) state``."""
    if axis.num_qubits != state.num_qubits:
        raise ValueError(f"dimension mismatch: {axis.num_qubits} vs {state.num_qubits} qubits")
    a = axis.amplitudes
    overlap = np.vdot(a, state.amplitudes)
    return StateVector(2.0 * overlap * a - state.amplitudes, state.num_qubits)


def probability_mass(state: StateVector, indices: Iterable[int]) -> float:
    idx = np.fromiter((int(i) for i in indices), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= state.dim):
        raise ValueError(f"indices out of range [0, {state.dim})")
    idx = np.unique(idx)
    return float(np.sum(state.probabilities()[idx]))


def marginal_distribution(state: StateVector, qubit_indices: Iterable[int]) -> tuple[list[int], np.ndarray]:
    """Distribution over the joint values of ``qubit_indices``.

    Returns the qubits sorted high to low and an array whose entry ``v`` is the
    probability of reading the big-endian value ``v`` on those qubits.
    """
    qubits = sorted({int(q) for q in qubit_indices}, reverse=True)
    if not qubits:
        raise ValueError("qubit subset must be non-empty")
    for q in qubits:
        _check_qubit_index(state, q)
    n = state.num_qubits
    # tensor axis k corresponds to qubit n-1-k
    probs = state.probabilities().reshape([2] * n)
    keep_axes = [n - 1 - q for q in qubits]
    drop_axes = tuple(ax for ax in range(n) if ax not in keep_axes)
    marg = probs.sum(axis=drop_axes) if drop_axes else probs
    # remaining axes are in increasing axis order == decreasing qubit order
    return qubits, marg.reshape(-1)


def _subset_values(num_qubits: int, qubits: list[int]) -> np.ndarray:
    idx = np.arange(1 << num_qubits)
    value = np.zeros_like(idx)
    for q in qubits:
        value = (value << 1) | ((idx >> q) & 1)
    return value


def measure_subset(state: StateVector, qubit_indices: Iterable[int], rng_seed: int) -> tuple[str, StateVector]:
    """Measure a subset of qubits with a seeded generator.

    The outcome bitstring lists the measured qubits from highest to lowest.
    The returned state is the renormalized post-measurement state.
    """
    qubits, marg = marginal_distribution(state, qubit_indices)
    rng = np.random.default_rng(rng_seed)
    p = marg / marg.sum()
    value = int(rng.choice(p.shape[0], p=p))
    outcome = format(value, f"0{len(qubits)}b")

    keep = _subset_values(state.num_qubits, qubits) == value
    out = np.where(keep, state.amplitudes, 0.0)
    norm = math.sqrt(float(np.sum(np.abs(out) ** 2)))
    return outcome, StateVector(out / norm, state.num_qubits)


def sample_subset(state: StateVector, qubit_indices: Iterable[int], shots: int, rng_seed: int) -> dict[str, int]:
    """Counts of ``shots`` seeded repeated measurements, without collapse."""
    qubits, marg = marginal_distribution(state, qubit_indices)
    rng = np.random.default_rng(rng_seed)
    counts = rng.multinomial(shots, marg / marg.sum())
    width = len(qubits)
    return {format(v, f"0{width}b"): int(c) for v, c in enumerate(counts) if c}


def tensor_with_ancilla(state: StateVector, ancilla: StateVector) -> StateVector:
    """``ancilla ⊗ state`` with the ancilla as the new most significant qubit."""
    if ancilla.num_qubits != 1:
        raise ValueError(f"ancilla must be a single qubit, got {ancilla.num_qubits}")
    _check_qubit_count(state.num_qubits + 1)
    out = np.kron(ancilla.amplitudes, state.amplitudes)
    return StateVector(out, state.num_qubits + 1)


def bitstring(index: int, num_qubits: int) -> str:
    return format(index, f"0{num_qubits}b")


def parse_bitstring(bits: str) -> int:
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bitstring: {bits!r}")
    return int(bits, 2)
